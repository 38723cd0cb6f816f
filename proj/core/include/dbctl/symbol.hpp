#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace dbctl {

// Role of a symbol inside a phase space. The kind is fixed at declaration.
enum class SymbolKind {
  Coordinate,
  Momentum,
  Multiplier,          // adjoint-state coordinates (Lambda, phi, sigma, ...)
  Control,
  Parameter,
  Time,
  ConjugateCoordinate, // holomorphic partner of a Coordinate (psibar, ...)
  ConjugateMomentum,
};

const char* kind_name(SymbolKind k);

struct SymbolData {
  std::string name;
  SymbolKind kind;
  std::uint32_t seq;             // declaration index; total order for canonical forms
  const SymbolData* conj;        // conjugation partner for numeric evaluation, or null
};

// Lightweight handle; the owning SymbolTable must outlive every expression
// that mentions the symbol.
class Symbol {
public:
  Symbol() : d_(nullptr) {}
  explicit Symbol(const SymbolData* d) : d_(d) {}

  const std::string& name() const { return d_->name; }
  SymbolKind kind() const { return d_->kind; }
  std::uint32_t seq() const { return d_->seq; }
  Symbol conjugate() const { return Symbol(d_->conj); }
  bool has_conjugate() const { return d_->conj != nullptr; }

  bool valid() const { return d_ != nullptr; }
  bool operator==(const Symbol& o) const { return d_ == o.d_; }
  bool operator!=(const Symbol& o) const { return d_ != o.d_; }
  bool operator<(const Symbol& o) const { return seq() < o.seq(); }

  const SymbolData* raw() const { return d_; }

private:
  const SymbolData* d_;
};

struct SymbolHash {
  std::size_t operator()(const Symbol& s) const {
    return std::hash<const void*>()(s.raw());
  }
};

// Declaration registry. Append-only; names unique. Pointer-stable so Symbol
// handles stay valid for the table's lifetime.
class SymbolTable {
public:
  SymbolTable() = default;
  SymbolTable(const SymbolTable&) = delete;
  SymbolTable& operator=(const SymbolTable&) = delete;

  Symbol declare(const std::string& name, SymbolKind kind);
  // Declares `name` and `conj_name` as conjugation partners of each other.
  std::pair<Symbol, Symbol> declare_conjugate_pair(const std::string& name,
                                                   SymbolKind kind,
                                                   const std::string& conj_name,
                                                   SymbolKind conj_kind);
  void link_conjugates(Symbol a, Symbol b);

  Symbol lookup(const std::string& name) const;  // invalid Symbol if absent
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  std::size_t size() const { return data_.size(); }
  Symbol at(std::size_t i) const { return Symbol(&data_[i]); }

private:
  std::deque<SymbolData> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace dbctl
