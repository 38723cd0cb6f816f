#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dbctl/coeff.hpp"
#include "dbctl/symbol.hpp"

namespace dbctl {

// Immutable expression tree over exact Gaussian-rational literals and
// Symbols. No floating-point literals; trees carry no simplification state —
// canonicalize() is the single source of truth for equality.
class Expr {
public:
  enum class Kind { Number, Sym, Add, Mul, Pow, Div };

  Expr();  // the number 0
  static Expr number(Coeff c);
  static Expr number(long n) { return number(Coeff(n)); }
  static Expr rational(long p, long q);
  static Expr imaginary() { return number(Coeff::imaginary()); }
  static Expr symbol(Symbol s);
  static Expr add(std::vector<Expr> kids);
  static Expr mul(std::vector<Expr> kids);
  static Expr pow(Expr base, long exponent);
  static Expr div(Expr num, Expr den);

  Kind kind() const { return n_->kind; }
  const Coeff& number_value() const { return n_->num; }
  Symbol sym() const { return n_->sym; }
  const std::vector<Expr>& kids() const { return n_->kids; }
  long exponent() const { return n_->expo; }

  bool is_literal_zero() const {
    return kind() == Kind::Number && n_->num.is_zero();
  }

  void free_symbols(std::set<Symbol>& out) const;
  std::set<Symbol> free_symbols() const;

  std::string str() const;

private:
  struct Node {
    Kind kind;
    Coeff num;
    Symbol sym;
    std::vector<Expr> kids;
    long expo = 0;
  };
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;

  void print(std::string& out, int parent_prec) const;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);

}  // namespace dbctl
