#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace greenform {

// period 0 encodes an infinite shift orbit.
struct OrbitDecl {
  std::string name;
  long period = 0;
  bool infinite() const { return period == 0; }
};

struct ObjectRef {
  int orbit = 0;
  long shift = 0;
  auto operator<=>(const ObjectRef&) const = default;
};

// X -> Y -> Z -> X[1] at the level of objects; Y is a multiset of summands.
struct ARTriangle {
  ObjectRef x;
  std::vector<ObjectRef> y;
  ObjectRef z;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

class CategoryPresentation;

// Orbit pairs whose stored hom fails hom(A,B) = bar(hom(B,A)), compared
// cyclically on finite windows. Empty means the table is Hermitian.
std::vector<std::string> hermitian_failures(const CategoryPresentation& p);

// Finite presentation of a Krull-Schmidt triangulated category: shift orbits,
// one hom Laurent polynomial per ordered orbit pair, AR triangles, flags.
//
// The hom polynomial for (A, B) has coefficient of t^i equal to
// dim Hom(rep_A, rep_B[i]). When either orbit is finite the dimensions are
// periodic in i with period g = gcd of the periods (infinite treated as 0),
// and the polynomial is stored in the exponent window 0..g-1.
class CategoryPresentation {
 public:
  CategoryPresentation() = default;
  explicit CategoryPresentation(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int add_orbit(const std::string& name, long period);
  int orbit_count() const { return static_cast<int>(orbits_.size()); }
  const OrbitDecl& orbit(int i) const { return orbits_.at(i); }
  int orbit_index(const std::string& name) const;  // -1 when absent
  bool has_infinite_orbit() const;

  bool hypothesis42() const { return hyp42_; }
  bool serre_trivial() const { return serre_trivial_; }
  void set_hypothesis42(bool v) { hyp42_ = v; }
  void set_serre_trivial(bool v) { serre_trivial_ = v; }

  // Window size for an orbit pair: gcd of the periods with infinite = 0;
  // 0 means no cyclic reduction.
  long pair_window(int a, int b) const;
  // Stores the hom polynomial; exponents must lie inside the pair window.
  void set_hom(int a, int b, const LaurentPoly& h);
  const LaurentPoly& hom_poly(int a, int b) const;  // zero when unset
  const std::map<std::pair<int, int>, LaurentPoly>& homs() const {
    return homs_;
  }

  void add_triangle(ARTriangle tr);
  const std::vector<ARTriangle>& triangles() const { return triangles_; }

  // Shift reduced mod the orbit period for finite orbits.
  ObjectRef canonical(const ObjectRef& r) const;
  ObjectRef shifted(const ObjectRef& r, long k) const;
  // dim Hom(a, b) via Hom(M[j], N[i]) = Hom(M, N[i-j]).
  Int hom_dim(const ObjectRef& a, const ObjectRef& b) const;

  // All objects, orbits in declaration order and shifts 0..period-1.
  // Throws Error(InfiniteOrbit) when some orbit is infinite.
  std::vector<ObjectRef> enumerate_objects() const;

  std::string ref_str(const ObjectRef& r) const;
  // objref grammar: name or name[shift].
  ObjectRef parse_ref(const std::string& text) const;

  ValidationReport validate() const;

  // Canonical file form; parse(emit()) reproduces the presentation and
  // emit(parse(text)) is the identity on canonical files.
  std::string emit() const;
  static CategoryPresentation parse(const std::string& text);
  static CategoryPresentation parse_file(const std::string& path);

 private:
  std::string name_;
  std::vector<OrbitDecl> orbits_;
  std::map<std::string, int> orbit_index_;
  std::map<std::pair<int, int>, LaurentPoly> homs_;
  std::vector<ARTriangle> triangles_;
  bool hyp42_ = false;
  bool serre_trivial_ = false;

  void check_orbit(int i) const;
};

}  // namespace greenform
