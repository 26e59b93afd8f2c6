#include "greenform.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "category.hpp"
#include "errors.hpp"
#include "green.hpp"
#include "intmatrix.hpp"
#include "laurent.hpp"
#include "oracle.hpp"
#include "ratfun.hpp"
#include "tform.hpp"
#include "za.hpp"

using namespace greenform;

struct gf_laurent {
  LaurentPoly v;
};
struct gf_ratfun {
  RatFun v;
};
struct gf_presentation {
  CategoryPresentation v;
};
struct gf_report {
  bool ok = true;
  std::vector<std::string> lines;
};
struct gf_kernel {
  std::vector<std::string> closed;
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool equal = false;
};

namespace {

thread_local std::string g_last_error;

gf_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return GF_ERR_PARSE;
    case ErrorCode::UnknownObject: return GF_ERR_UNKNOWN_OBJECT;
    case ErrorCode::InfiniteOrbit: return GF_ERR_INFINITE_ORBIT;
    case ErrorCode::Hypothesis42Required: return GF_ERR_HYP42_REQUIRED;
    case ErrorCode::NotPolynomial: return GF_ERR_NOT_POLYNOMIAL;
    case ErrorCode::DivisionByZero: return GF_ERR_DIVISION_BY_ZERO;
    case ErrorCode::MissingCrossForm: return GF_ERR_MISSING_CROSS_FORM;
    case ErrorCode::InvalidRim: return GF_ERR_INVALID_RIM;
    case ErrorCode::WindowTooSmall: return GF_ERR_WINDOW_TOO_SMALL;
    case ErrorCode::InvalidArgument: return GF_ERR_INVALID_ARGUMENT;
    case ErrorCode::IoError: return GF_ERR_IO;
    case ErrorCode::Internal: return GF_ERR_INTERNAL;
  }
  return GF_ERR_INTERNAL;
}

template <typename F>
gf_status wrap(F&& body) {
  try {
    body();
    return GF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gf_status require(bool cond, const char* what) {
  if (cond) return GF_OK;
  g_last_error = std::string("null argument: ") + what;
  return GF_ERR_INVALID_ARGUMENT;
}

std::string vector_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

gf_report* make_report(bool ok, std::vector<std::string> lines) {
  auto* r = new gf_report;
  r->ok = ok;
  r->lines = std::move(lines);
  return r;
}

gf_status kernel_entry(const std::vector<std::string>& list, int i,
                       char** out) {
  if (!out) {
    g_last_error = "null argument: kernel entry";
    return GF_ERR_INVALID_ARGUMENT;
  }
  if (i < 0 || i >= static_cast<int>(list.size())) {
    g_last_error = "kernel entry index out of range";
    return GF_ERR_INVALID_ARGUMENT;
  }
  *out = dup_string(list[static_cast<std::size_t>(i)]);
  return GF_OK;
}

}  // namespace

extern "C" {

const char* gf_last_error(void) { return g_last_error.c_str(); }

void gf_string_free(char* s) { std::free(s); }
void gf_laurent_free(gf_laurent* p) { delete p; }
void gf_ratfun_free(gf_ratfun* f) { delete f; }
void gf_presentation_free(gf_presentation* p) { delete p; }
void gf_report_free(gf_report* r) { delete r; }
void gf_kernel_free(gf_kernel* k) { delete k; }

/* ---- Laurent polynomials ---- */

gf_status gf_laurent_parse(const char* text, gf_laurent** out) {
  if (gf_status s = require(text && out, "gf_laurent_parse")) return s;
  return wrap([&] { *out = new gf_laurent{LaurentPoly::parse(text)}; });
}

gf_status gf_laurent_str(const gf_laurent* p, char** out) {
  if (gf_status s = require(p && out, "gf_laurent_str")) return s;
  return wrap([&] { *out = dup_string(p->v.str()); });
}

#define GF_LAURENT_BINOP(NAME, EXPR)                                     \
  gf_status NAME(const gf_laurent* a, const gf_laurent* b,               \
                 gf_laurent** out) {                                     \
    if (gf_status s = require(a && b && out, #NAME)) return s;           \
    return wrap([&] { *out = new gf_laurent{EXPR}; });                   \
  }

GF_LAURENT_BINOP(gf_laurent_add, a->v + b->v)
GF_LAURENT_BINOP(gf_laurent_sub, a->v - b->v)
GF_LAURENT_BINOP(gf_laurent_mul, a->v * b->v)
#undef GF_LAURENT_BINOP

gf_status gf_laurent_bar(const gf_laurent* p, gf_laurent** out) {
  if (gf_status s = require(p && out, "gf_laurent_bar")) return s;
  return wrap([&] { *out = new gf_laurent{p->v.bar()}; });
}

gf_status gf_laurent_sigma(long r, gf_laurent** out) {
  if (gf_status s = require(out != nullptr, "gf_laurent_sigma")) return s;
  return wrap([&] { *out = new gf_laurent{LaurentPoly::sigma(r)}; });
}

gf_status gf_laurent_eval_minus_one(const gf_laurent* p, char** out) {
  if (gf_status s = require(p && out, "gf_laurent_eval_minus_one")) return s;
  return wrap([&] { *out = dup_string(p->v.eval_minus_one().str()); });
}

gf_status gf_laurent_cyclic_reduce(const gf_laurent* p, long n, char** out) {
  if (gf_status s = require(p && out, "gf_laurent_cyclic_reduce")) return s;
  return wrap([&] { *out = dup_string(vector_str(p->v.cyclic_reduce(n))); });
}

int gf_laurent_equal(const gf_laurent* a, const gf_laurent* b) {
  return a && b && a->v == b->v ? 1 : 0;
}

/* ---- rational functions ---- */

gf_status gf_ratfun_make(const gf_laurent* num, const gf_laurent* den,
                         gf_ratfun** out) {
  if (gf_status s = require(num && den && out, "gf_ratfun_make")) return s;
  return wrap([&] { *out = new gf_ratfun{RatFun(num->v, den->v)}; });
}

gf_status gf_ratfun_str(const gf_ratfun* f, char** out) {
  if (gf_status s = require(f && out, "gf_ratfun_str")) return s;
  return wrap([&] { *out = dup_string(f->v.str()); });
}

#define GF_RATFUN_BINOP(NAME, OP)                                        \
  gf_status NAME(const gf_ratfun* a, const gf_ratfun* b, gf_ratfun** out) { \
    if (gf_status s = require(a && b && out, #NAME)) return s;           \
    return wrap([&] { *out = new gf_ratfun{a->v OP b->v}; });            \
  }

GF_RATFUN_BINOP(gf_ratfun_add, +)
GF_RATFUN_BINOP(gf_ratfun_sub, -)
GF_RATFUN_BINOP(gf_ratfun_mul, *)
GF_RATFUN_BINOP(gf_ratfun_div, /)
#undef GF_RATFUN_BINOP

gf_status gf_ratfun_bar(const gf_ratfun* f, gf_ratfun** out) {
  if (gf_status s = require(f && out, "gf_ratfun_bar")) return s;
  return wrap([&] { *out = new gf_ratfun{f->v.bar()}; });
}

gf_status gf_ratfun_to_laurent(const gf_ratfun* f, gf_laurent** out) {
  if (gf_status s = require(f && out, "gf_ratfun_to_laurent")) return s;
  return wrap([&] { *out = new gf_laurent{f->v.to_laurent()}; });
}

int gf_ratfun_equal(const gf_ratfun* a, const gf_ratfun* b) {
  return a && b && a->v == b->v ? 1 : 0;
}

/* ---- reports ---- */

int gf_report_ok(const gf_report* r) { return r && r->ok ? 1 : 0; }

int gf_report_count(const gf_report* r) {
  return r ? static_cast<int>(r->lines.size()) : 0;
}

gf_status gf_report_line(const gf_report* r, int i, char** out) {
  if (gf_status s = require(r && out, "gf_report_line")) return s;
  if (i < 0 || i >= static_cast<int>(r->lines.size())) {
    g_last_error = "report line index out of range";
    return GF_ERR_INVALID_ARGUMENT;
  }
  *out = dup_string(r->lines[static_cast<std::size_t>(i)]);
  return GF_OK;
}

/* ---- presentations ---- */

gf_status gf_presentation_parse(const char* text, gf_presentation** out) {
  if (gf_status s = require(text && out, "gf_presentation_parse")) return s;
  return wrap([&] {
    *out = new gf_presentation{CategoryPresentation::parse(text)};
  });
}

gf_status gf_presentation_parse_file(const char* path,
                                     gf_presentation** out) {
  if (gf_status s = require(path && out, "gf_presentation_parse_file"))
    return s;
  return wrap([&] {
    *out = new gf_presentation{CategoryPresentation::parse_file(path)};
  });
}

gf_status gf_presentation_name(const gf_presentation* p, char** out) {
  if (gf_status s = require(p && out, "gf_presentation_name")) return s;
  *out = dup_string(p->v.name());
  return GF_OK;
}

gf_status gf_presentation_emit(const gf_presentation* p, char** out) {
  if (gf_status s = require(p && out, "gf_presentation_emit")) return s;
  return wrap([&] { *out = dup_string(p->v.emit()); });
}

gf_status gf_presentation_validate(const gf_presentation* p,
                                   gf_report** out) {
  if (gf_status s = require(p && out, "gf_presentation_validate")) return s;
  return wrap([&] {
    ValidationReport r = p->v.validate();
    *out = make_report(r.ok(), r.issues);
  });
}

gf_status gf_presentation_object_count(const gf_presentation* p, int* out) {
  if (gf_status s = require(p && out, "gf_presentation_object_count"))
    return s;
  return wrap([&] {
    *out = static_cast<int>(p->v.enumerate_objects().size());
  });
}

gf_status gf_presentation_object_name(const gf_presentation* p, int i,
                                      char** out) {
  if (gf_status s = require(p && out, "gf_presentation_object_name"))
    return s;
  return wrap([&] {
    std::vector<ObjectRef> objects = p->v.enumerate_objects();
    if (i < 0 || i >= static_cast<int>(objects.size()))
      fail(ErrorCode::InvalidArgument, "object index out of range");
    *out = dup_string(p->v.ref_str(objects[static_cast<std::size_t>(i)]));
  });
}

gf_status gf_presentation_hom_dim(const gf_presentation* p, const char* a,
                                  const char* b, char** out) {
  if (gf_status s = require(p && a && b && out, "gf_presentation_hom_dim"))
    return s;
  return wrap([&] {
    Int d = p->v.hom_dim(p->v.parse_ref(a), p->v.parse_ref(b));
    *out = dup_string(d.str());
  });
}

gf_status gf_presentation_gram_entry(const gf_presentation* p, int i, int j,
                                     char** out) {
  if (gf_status s = require(p && out, "gf_presentation_gram_entry")) return s;
  return wrap([&] {
    std::vector<ObjectRef> objects = p->v.enumerate_objects();
    int n = static_cast<int>(objects.size());
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail(ErrorCode::InvalidArgument, "gram index out of range");
    Int d = p->v.hom_dim(objects[static_cast<std::size_t>(i)],
                         objects[static_cast<std::size_t>(j)]);
    *out = dup_string(d.str());
  });
}

gf_status gf_presentation_triangle_count(const gf_presentation* p, int* out) {
  if (gf_status s = require(p && out, "gf_presentation_triangle_count"))
    return s;
  *out = static_cast<int>(p->v.triangles().size());
  return GF_OK;
}

gf_status gf_presentation_orbit_structure(const gf_presentation* p,
                                          gf_report** lines,
                                          int* qt_dimension) {
  if (gf_status s =
          require(p && lines && qt_dimension, "gf_presentation_orbit_structure"))
    return s;
  return wrap([&] {
    OrbitStructure o = orbit_structure(p->v);
    *lines = make_report(true, o.lines);
    *qt_dimension = o.qt_dimension;
  });
}

gf_status gf_presentation_prop31(const gf_presentation* p, gf_report** out) {
  if (gf_status s = require(p && out, "gf_presentation_prop31")) return s;
  return wrap([&] {
    OrthogonalityReport r = verify_ar_orthogonality(p->v);
    std::vector<std::string> lines = r.mismatches;
    std::ostringstream os;
    os << r.checks << " checks over " << p->v.triangles().size()
       << " triangles";
    lines.insert(lines.begin(), os.str());
    *out = make_report(r.ok(), std::move(lines));
  });
}

gf_status gf_presentation_kernel(const gf_presentation* p, gf_kernel** out) {
  if (gf_status s = require(p && out, "gf_presentation_kernel")) return s;
  return wrap([&] {
    auto closed = kernel_closed_form(p->v);
    auto closed_lattice = kernel_closed_form_lattice(p->v);
    KernelBases bases = kernel_bruteforce(p->v);
    auto* k = new gf_kernel;
    for (const GreenElement& e : closed) k->closed.push_back(e.str(p->v));
    for (const auto& v : bases.left) k->left.push_back(vector_str(v));
    for (const auto& v : bases.right) k->right.push_back(vector_str(v));
    k->equal = lattice_equal(closed_lattice, bases.left) &&
               lattice_equal(bases.left, bases.right);
    *out = k;
  });
}

gf_status gf_presentation_tform(const gf_presentation* p, const char* a,
                                const char* b, gf_ratfun** out) {
  if (gf_status s = require(p && a && b && out, "gf_presentation_tform"))
    return s;
  return wrap([&] {
    if (!p->v.hypothesis42())
      fail(ErrorCode::Hypothesis42Required,
           "hypothesis 4.2 required: the t-form is not defined on "
           "presentation '" +
               p->v.name() + "'");
    TElement x = t_object(p->v, p->v.parse_ref(a));
    TElement y = t_object(p->v, p->v.parse_ref(b));
    *out = new gf_ratfun{t_form(p->v, x, y)};
  });
}

gf_status gf_presentation_dual(const gf_presentation* p, int triangle_index,
                               char** element, gf_report** check) {
  if (gf_status s =
          require(p && element && check, "gf_presentation_dual"))
    return s;
  return wrap([&] {
    const auto& triangles = p->v.triangles();
    if (triangle_index < 0 ||
        triangle_index >= static_cast<int>(triangles.size()))
      fail(ErrorCode::InvalidArgument, "triangle index out of range");
    const ARTriangle& tr = triangles[static_cast<std::size_t>(triangle_index)];
    TElement d = dual_element(p->v, tr);
    DualityReport r = verify_duality(p->v, tr);
    *element = dup_string(d.str(p->v));
    *check = make_report(r.ok(), r.violations);
  });
}

gf_status gf_presentation_hermitian(const gf_presentation* p,
                                    gf_report** out) {
  if (gf_status s = require(p && out, "gf_presentation_hermitian")) return s;
  return wrap([&] {
    HermitianReport r = hermitian_check(p->v);
    *out = make_report(r.ok(), r.failures);
  });
}

gf_status gf_presentation_euler(const gf_presentation* p, const char* a,
                                const char* b, char** out) {
  if (gf_status s = require(p && a && b && out, "gf_presentation_euler"))
    return s;
  return wrap([&] {
    if (!p->v.hypothesis42())
      fail(ErrorCode::Hypothesis42Required,
           "hypothesis 4.2 required: the t-form is not defined on "
           "presentation '" +
               p->v.name() + "'");
    TElement x = t_object(p->v, p->v.parse_ref(a));
    TElement y = t_object(p->v, p->v.parse_ref(b));
    *out = dup_string(euler_specialization(p->v, x, y).str());
  });
}

/* ---- kernel accessors ---- */

int gf_kernel_closed_count(const gf_kernel* k) {
  return k ? static_cast<int>(k->closed.size()) : 0;
}
int gf_kernel_left_count(const gf_kernel* k) {
  return k ? static_cast<int>(k->left.size()) : 0;
}
int gf_kernel_right_count(const gf_kernel* k) {
  return k ? static_cast<int>(k->right.size()) : 0;
}
int gf_kernel_lattices_equal(const gf_kernel* k) {
  return k && k->equal ? 1 : 0;
}

gf_status gf_kernel_closed_element(const gf_kernel* k, int i, char** out) {
  if (gf_status s = require(k != nullptr, "gf_kernel_closed_element"))
    return s;
  return kernel_entry(k->closed, i, out);
}
gf_status gf_kernel_left_vector(const gf_kernel* k, int i, char** out) {
  if (gf_status s = require(k != nullptr, "gf_kernel_left_vector")) return s;
  return kernel_entry(k->left, i, out);
}
gf_status gf_kernel_right_vector(const gf_kernel* k, int i, char** out) {
  if (gf_status s = require(k != nullptr, "gf_kernel_right_vector")) return s;
  return kernel_entry(k->right, i, out);
}

/* ---- ZA-infinity engine ---- */

gf_status gf_za_same_form(const gf_laurent* self, long m, long n,
                          gf_laurent** out) {
  if (gf_status s = require(self && out, "gf_za_same_form")) return s;
  return wrap([&] {
    RimData rim(self->v);
    *out = new gf_laurent{same_component_form(rim, m, n)};
  });
}

gf_status gf_za_same_recurrence(const gf_laurent* self, long m, long n,
                                gf_laurent** out) {
  if (gf_status s = require(self && out, "gf_za_same_recurrence")) return s;
  return wrap([&] {
    RimData rim(self->v);
    *out = new gf_laurent{same_component_recurrence(rim, m, n)};
  });
}

gf_status gf_za_cross_form(const gf_laurent* self, const gf_laurent* cross,
                           long m, long n, gf_laurent** out) {
  if (gf_status s = require(self && out, "gf_za_cross_form")) return s;
  return wrap([&] {
    RimData rim(self->v, cross ? std::optional<LaurentPoly>(cross->v)
                               : std::nullopt);
    *out = new gf_laurent{cross_component_form(rim, m, n)};
  });
}

gf_status gf_za_cross_recurrence(const gf_laurent* self,
                                 const gf_laurent* cross, long m, long n,
                                 gf_laurent** out) {
  if (gf_status s = require(self && out, "gf_za_cross_recurrence")) return s;
  return wrap([&] {
    RimData rim(self->v, cross ? std::optional<LaurentPoly>(cross->v)
                               : std::nullopt);
    *out = new gf_laurent{cross_component_recurrence(rim, m, n)};
  });
}

gf_status gf_za_triangles(int depth, char** out) {
  if (gf_status s = require(out != nullptr, "gf_za_triangles")) return s;
  return wrap([&] {
    std::ostringstream os;
    for (const SymTriangle& tr : component_triangles(depth)) {
      auto obj = [](const SymObject& o) {
        std::ostringstream s;
        s << 'C' << o.distance;
        if (o.shift != 0) s << '[' << o.shift << ']';
        return s.str();
      };
      os << "triangle " << obj(tr.x) << " | ";
      for (std::size_t i = 0; i < tr.y.size(); ++i) {
        if (i) os << " + ";
        os << obj(tr.y[i]);
      }
      os << " | " << obj(tr.z) << '\n';
    }
    *out = dup_string(os.str());
  });
}

gf_status gf_za_endo_constant(const gf_laurent* self, long m, char** out) {
  if (gf_status s = require(self && out, "gf_za_endo_constant")) return s;
  return wrap([&] {
    RimData rim(self->v);
    *out = dup_string(endo_constant_term(rim, m).str());
  });
}

gf_status gf_za_brick_scan(const gf_laurent* self, long max_m,
                           gf_report** out) {
  if (gf_status s = require(self && out, "gf_za_brick_scan")) return s;
  return wrap([&] {
    RimData rim(self->v);
    BrickScan scan = brick_strip_scan(rim, max_m);
    std::vector<std::string> lines;
    if (scan.simple_projective_stalk)
      lines.push_back("a0 = 1: simple projective stalk");
    lines.push_back(scan.rim_consistent
                        ? "rim clue: coefficient of t vanishes (consistent "
                          "with a rim object)"
                        : "rim clue: coefficient of t is nonzero (the object "
                          "is not on the rim)");
    for (const BrickRow& row : scan.rows) {
      std::ostringstream os;
      os << "m=" << row.m << ": endo-dim " << row.endo_dim << ", dim-2 strip "
         << (row.dim2 ? "yes" : "no");
      lines.push_back(os.str());
    }
    *out = make_report(true, std::move(lines));
  });
}

/* ---- generators ---- */

gf_status gf_oracle_uniserial(int n, gf_presentation** out) {
  if (gf_status s = require(out != nullptr, "gf_oracle_uniserial")) return s;
  return wrap([&] { *out = new gf_presentation{uniserial_category(n)}; });
}

gf_status gf_oracle_dual_numbers(int depth, long shift_window,
                                 gf_presentation** out) {
  if (gf_status s = require(out != nullptr, "gf_oracle_dual_numbers"))
    return s;
  return wrap([&] {
    *out = new gf_presentation{dual_numbers_component(depth, shift_window)};
  });
}

}  // extern "C"
