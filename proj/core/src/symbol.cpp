#include "dbctl/symbol.hpp"

#include "dbctl/errors.hpp"

namespace dbctl {

const char* kind_name(SymbolKind k) {
  switch (k) {
    case SymbolKind::Coordinate: return "coordinate";
    case SymbolKind::Momentum: return "momentum";
    case SymbolKind::Multiplier: return "multiplier";
    case SymbolKind::Control: return "control";
    case SymbolKind::Parameter: return "parameter";
    case SymbolKind::Time: return "time";
    case SymbolKind::ConjugateCoordinate: return "conjugate-coordinate";
    case SymbolKind::ConjugateMomentum: return "conjugate-momentum";
  }
  return "?";
}

Symbol SymbolTable::declare(const std::string& name, SymbolKind kind) {
  if (index_.count(name))
    throw DomainError("symbol '" + name + "' already declared");
  data_.push_back(SymbolData{name, kind, static_cast<std::uint32_t>(data_.size()), nullptr});
  index_.emplace(name, data_.size() - 1);
  return Symbol(&data_.back());
}

std::pair<Symbol, Symbol> SymbolTable::declare_conjugate_pair(
    const std::string& name, SymbolKind kind,
    const std::string& conj_name, SymbolKind conj_kind) {
  Symbol a = declare(name, kind);
  Symbol b = declare(conj_name, conj_kind);
  link_conjugates(a, b);
  return {a, b};
}

void SymbolTable::link_conjugates(Symbol a, Symbol b) {
  data_[a.seq()].conj = b.raw();
  data_[b.seq()].conj = a.raw();
}

Symbol SymbolTable::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return Symbol();
  return Symbol(&data_[it->second]);
}

}  // namespace dbctl
