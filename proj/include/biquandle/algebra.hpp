#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biquandle/error.hpp"

namespace biq {

/// Elements of a finite biquandle are 1-based, {1..n}. For the modular
/// constructions element k stands for the residue k mod n, so n plays 0.
using Element = int;
using Table = std::vector<std::vector<Element>>;

/// Raw, unvalidated operation tables in row-major "list of lists" order:
/// over[x-1][y-1] = x ⊼ y, under[x-1][y-1] = x ⊻ y.
struct BiquandleTables {
  Table over;
  Table under;
};

enum class Axiom {
  shape,
  diagonal,
  over_column_bijective,
  under_column_bijective,
  sideways_bijective,
  exchange_over_over,
  exchange_under_over,
  exchange_under_under,
};

const char* to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Exhaustive O(n^3) check of the biquandle axioms. Reports every violated
/// axiom once, with the first witness found in lexicographic scan order.
ValidationReport validate_axioms(const BiquandleTables& tables);

/// x ⊼ y = a·x + b·y, x ⊻ y = c·x + d·y over Z/n.
struct LinearForm {
  std::int64_t modulus = 1;
  std::int64_t a = 1, b = 0, c = 1, d = 0;

  bool operator==(const LinearForm&) const = default;
};

class FiniteBiquandle {
public:
  /// Validates and throws Error(shape | axiom_violation) on failure.
  static FiniteBiquandle from_tables(const Table& over, const Table& under);
  static FiniteBiquandle from_tables(const BiquandleTables& tables) {
    return from_tables(tables.over, tables.under);
  }
  /// Reads printed tables as division tables (see operations_from_division).
  static FiniteBiquandle from_division_tables(const BiquandleTables& printed);

  int size() const noexcept { return n_; }
  Element over(Element x, Element y) const { return over_[index(x, y)]; }
  Element under(Element x, Element y) const { return under_[index(x, y)]; }

  /// The x with x ⊼ y = z (column maps are bijections).
  Element over_column_inverse(Element y, Element z) const { return over_inv_[index(z, y)]; }
  /// The x with x ⊻ y = z.
  Element under_column_inverse(Element y, Element z) const { return under_inv_[index(z, y)]; }

  bool is_quandle() const noexcept;
  BiquandleTables tables() const;

  /// Coefficients (a,b,c,d) mod n when both tables are homogeneous linear in
  /// the residue encoding. Detected from the tables, so R_n qualifies too.
  std::optional<LinearForm> linear_form() const;

  bool operator==(const FiniteBiquandle& other) const {
    return n_ == other.n_ && over_ == other.over_ && under_ == other.under_;
  }

private:
  FiniteBiquandle() = default;
  std::size_t index(Element x, Element y) const {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y - 1);
  }

  int n_ = 0;
  std::vector<Element> over_;
  std::vector<Element> under_;
  std::vector<Element> over_inv_;
  std::vector<Element> under_inv_;
};

/// Converts division tables to operation tables. Printed over entry [w][y]
/// is read as the x with x ⊼ y = w, printed under entry [w][x] as the y with
/// x ⊻ y = w. Throws Error(shape | axiom_violation) when a printed column is
/// not a permutation, since the conversion is then undefined.
BiquandleTables operations_from_division(const BiquandleTables& printed);

/// A biquandle whose over operation is trivial; x ⊳ y := x ⊻ y.
class Quandle {
public:
  /// Throws Error(invalid_parameter) unless x ⊼ y = x throughout.
  explicit Quandle(FiniteBiquandle b);

  int size() const noexcept { return b_.size(); }
  Element op(Element x, Element y) const { return b_.under(x, y); }
  Element op_inverse(Element y, Element z) const { return b_.under_column_inverse(y, z); }
  const FiniteBiquandle& biquandle() const noexcept { return b_; }

private:
  FiniteBiquandle b_;
};

/// R_n: x ⊳ y = 2y - x mod n.
Quandle make_dihedral(int n);

/// Throws Error(axiom_violation) naming the first failing axiom and witness.
FiniteBiquandle make_linear_biquandle(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                                      std::int64_t d);

/// The four-element biquandle used for the b2 lower bounds, from its
/// printed division tables.
FiniteBiquandle biquandle_t();
/// The four-element linear biquandle (4,3,0,1,2).
FiniteBiquandle biquandle_z();
/// The four-element example from the preliminaries, from its printed
/// division tables.
FiniteBiquandle example_biquandle_4();

struct Endomorphism {
  std::vector<Element> images;  // images[x-1] = f(x)

  Element operator()(Element x) const { return images[static_cast<std::size_t>(x - 1)]; }
  bool operator==(const Endomorphism&) const = default;
  auto operator<=>(const Endomorphism&) const = default;
};

bool is_homomorphism(const FiniteBiquandle& source, const FiniteBiquandle& target,
                     const std::vector<Element>& images);

/// All operation-preserving maps, lexicographic in their image arrays.
std::vector<std::vector<Element>> enumerate_homs(const FiniteBiquandle& source, const FiniteBiquandle& target);
std::vector<Endomorphism> enumerate_endos(const FiniteBiquandle& b);

/// x ↦ a·x + b mod n on the residue encoding of an n-element algebra.
Endomorphism affine_map(int n, std::int64_t a, std::int64_t b);

class Permutation {
public:
  /// Throws Error(invalid_parameter) if images is not a bijection of {1..n}.
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<Element>& images() const noexcept { return images_; }

  /// (this ∘ other)(x) = this(other(x))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  std::uint64_t order() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<Element> images_;
};

/// x ↦ x ⊳ y
Permutation column_permutation(const Quandle& q, Element y);

inline constexpr std::size_t default_group_cap = 1'000'000;

/// Order of the group generated by gens, by breadth-first closure. Throws
/// Error(overflow) once more than cap elements have been seen.
std::uint64_t group_order(const std::vector<Permutation>& gens, std::size_t cap = default_group_cap);

/// Smallest subset containing S closed under ⊳ and the inverse column maps.
std::vector<Element> subquandle_closure(const Quandle& q, const std::vector<Element>& s);

// Text format: first line n, n rows of ⊼, blank line, n rows of ⊻.
BiquandleTables parse_biquandle_tables(std::string_view text);
FiniteBiquandle parse_biquandle(std::string_view text);
std::string serialize_biquandle(const FiniteBiquandle& b);

}  // namespace biq
