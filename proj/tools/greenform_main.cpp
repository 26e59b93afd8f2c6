// Command-line front end for the greenform shared library. Talks to the
// library exclusively through the public C interface.
//
// Exit codes: 0 success, 1 validation or mathematical check failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greenform.h"

namespace {

struct CliError {
  int code;
};

int exit_code_for(gf_status s) {
  switch (s) {
    case GF_OK:
      return 0;
    case GF_ERR_PARSE:
    case GF_ERR_UNKNOWN_OBJECT:
    case GF_ERR_INVALID_ARGUMENT:
    case GF_ERR_IO:
      return 2;
    default:
      return 1;
  }
}

void check(gf_status s) {
  if (s == GF_OK) return;
  std::cerr << "error: " << gf_last_error() << "\n";
  throw CliError{exit_code_for(s)};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gf_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() {
    if (p_) Free(p_);
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T** out() { return &p_; }
  T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using Laurent = Handle<gf_laurent, gf_laurent_free>;
using RatFun = Handle<gf_ratfun, gf_ratfun_free>;
using Presentation = Handle<gf_presentation, gf_presentation_free>;
using Report = Handle<gf_report, gf_report_free>;
using Kernel = Handle<gf_kernel, gf_kernel_free>;

void load(Presentation& p, const std::string& path) {
  check(gf_presentation_parse_file(path.c_str(), p.out()));
}

void print_report_lines(const gf_report* r, const char* indent = "") {
  for (int i = 0; i < gf_report_count(r); ++i) {
    char* line = nullptr;
    check(gf_report_line(r, i, &line));
    std::cout << indent << take(line) << "\n";
  }
}

int cmd_validate(const std::string& file) {
  Presentation p;
  load(p, file);
  Report r;
  check(gf_presentation_validate(p.get(), r.out()));
  if (gf_report_ok(r.get())) {
    std::cout << "valid\n";
    return 0;
  }
  print_report_lines(r.get());
  return 1;
}

int cmd_gram(const std::string& file) {
  Presentation p;
  load(p, file);
  int count = 0;
  check(gf_presentation_object_count(p.get(), &count));
  std::cout << "objects:";
  for (int i = 0; i < count; ++i) {
    char* name = nullptr;
    check(gf_presentation_object_name(p.get(), i, &name));
    std::cout << ' ' << take(name);
  }
  std::cout << "\n";
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      char* entry = nullptr;
      check(gf_presentation_gram_entry(p.get(), i, j, &entry));
      if (j) std::cout << ' ';
      std::cout << take(entry);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_kernel(const std::string& file) {
  Presentation p;
  load(p, file);
  Kernel k;
  check(gf_presentation_kernel(p.get(), k.out()));
  std::cout << "closed-form kernel basis:\n";
  if (gf_kernel_closed_count(k.get()) == 0) std::cout << "  (empty)\n";
  for (int i = 0; i < gf_kernel_closed_count(k.get()); ++i) {
    char* s = nullptr;
    check(gf_kernel_closed_element(k.get(), i, &s));
    std::cout << "  " << take(s) << "\n";
  }
  std::cout << "brute-force right kernel basis:\n";
  if (gf_kernel_right_count(k.get()) == 0) std::cout << "  (empty)\n";
  for (int i = 0; i < gf_kernel_right_count(k.get()); ++i) {
    char* s = nullptr;
    check(gf_kernel_right_vector(k.get(), i, &s));
    std::cout << "  " << take(s) << "\n";
  }
  std::cout << "brute-force left kernel basis:\n";
  if (gf_kernel_left_count(k.get()) == 0) std::cout << "  (empty)\n";
  for (int i = 0; i < gf_kernel_left_count(k.get()); ++i) {
    char* s = nullptr;
    check(gf_kernel_left_vector(k.get(), i, &s));
    std::cout << "  " << take(s) << "\n";
  }
  bool equal = gf_kernel_lattices_equal(k.get()) != 0;
  std::cout << (equal ? "LATTICES EQUAL" : "LATTICES DIFFER") << "\n";
  return equal ? 0 : 1;
}

int cmd_prop31(const std::string& file) {
  Presentation p;
  load(p, file);
  Report r;
  check(gf_presentation_prop31(p.get(), r.out()));
  char* summary = nullptr;
  check(gf_report_line(r.get(), 0, &summary));
  if (gf_report_ok(r.get())) {
    std::cout << "prop31: pass (" << take(summary) << ")\n";
    return 0;
  }
  std::cout << "prop31: FAIL (" << take(summary) << ")\n";
  for (int i = 1; i < gf_report_count(r.get()); ++i) {
    char* line = nullptr;
    check(gf_report_line(r.get(), i, &line));
    std::cout << "  " << take(line) << "\n";
  }
  return 1;
}

int cmd_tform(const std::string& file, const std::string& a,
              const std::string& b) {
  Presentation p;
  load(p, file);
  RatFun v;
  check(gf_presentation_tform(p.get(), a.c_str(), b.c_str(), v.out()));
  char* s = nullptr;
  check(gf_ratfun_str(v.get(), &s));
  std::cout << take(s) << "\n";
  return 0;
}

int cmd_dual(const std::string& file, int index) {
  Presentation p;
  load(p, file);
  char* element = nullptr;
  Report r;
  check(gf_presentation_dual(p.get(), index, &element, r.out()));
  std::cout << "dual element: " << take(element) << "\n";
  if (gf_report_ok(r.get())) {
    std::cout << "duality check: ok\n";
    return 0;
  }
  print_report_lines(r.get());
  return 1;
}

int cmd_hermitian(const std::string& file) {
  Presentation p;
  load(p, file);
  Report r;
  check(gf_presentation_hermitian(p.get(), r.out()));
  if (gf_report_ok(r.get())) {
    std::cout << "hermitian: ok\n";
    return 0;
  }
  print_report_lines(r.get());
  std::cout << "hermitian: FAIL\n";
  return 1;
}

int cmd_euler(const std::string& file, const std::string& a,
              const std::string& b) {
  Presentation p;
  load(p, file);
  char* s = nullptr;
  check(gf_presentation_euler(p.get(), a.c_str(), b.c_str(), &s));
  std::cout << take(s) << "\n";
  return 0;
}

int cmd_orbits(const std::string& file) {
  Presentation p;
  load(p, file);
  Report r;
  int dim = 0;
  check(gf_presentation_orbit_structure(p.get(), r.out(), &dim));
  print_report_lines(r.get());
  std::cout << "Q(t)-dimension: " << dim << "\n";
  return 0;
}

struct ZaFormOptions {
  std::string self;
  std::string cross;
  long m = 0;
  long n = 0;
  std::string method = "closed";
};

int cmd_za_form(const ZaFormOptions& opt) {
  Laurent self;
  check(gf_laurent_parse(opt.self.c_str(), self.out()));
  Laurent cross;
  if (!opt.cross.empty())
    check(gf_laurent_parse(opt.cross.c_str(), cross.out()));

  auto closed = [&](gf_laurent** out) {
    return opt.cross.empty()
               ? gf_za_same_form(self.get(), opt.m, opt.n, out)
               : gf_za_cross_form(self.get(), cross.get(), opt.m, opt.n, out);
  };
  auto recurrence = [&](gf_laurent** out) {
    return opt.cross.empty() ? gf_za_same_recurrence(self.get(), opt.m, opt.n,
                                                     out)
                             : gf_za_cross_recurrence(self.get(), cross.get(),
                                                      opt.m, opt.n, out);
  };

  if (opt.method == "closed" || opt.method == "recurrence") {
    Laurent v;
    check(opt.method == "closed" ? closed(v.out()) : recurrence(v.out()));
    char* s = nullptr;
    check(gf_laurent_str(v.get(), &s));
    std::cout << take(s) << "\n";
    return 0;
  }
  Laurent a, b;
  check(closed(a.out()));
  check(recurrence(b.out()));
  char* sa = nullptr;
  char* sb = nullptr;
  check(gf_laurent_str(a.get(), &sa));
  check(gf_laurent_str(b.get(), &sb));
  std::cout << take(sa) << "\n" << take(sb) << "\n";
  bool agree = gf_laurent_equal(a.get(), b.get()) != 0;
  std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? 0 : 1;
}

int cmd_za_triangles(int depth) {
  char* s = nullptr;
  check(gf_za_triangles(depth, &s));
  std::cout << take(s);
  return 0;
}

int cmd_za_brick(const std::string& self_text, long max_m) {
  Laurent self;
  check(gf_laurent_parse(self_text.c_str(), self.out()));
  Report r;
  check(gf_za_brick_scan(self.get(), max_m, r.out()));
  print_report_lines(r.get());
  return 0;
}

int emit_presentation(gf_presentation* p, const std::string& path) {
  char* text = nullptr;
  check(gf_presentation_emit(p, &text));
  std::string body = take(text);
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  return 0;
}

int cmd_oracle_uniserial(int n, const std::string& emit_path) {
  Presentation p;
  check(gf_oracle_uniserial(n, p.out()));
  return emit_presentation(p.get(), emit_path);
}

int cmd_oracle_dual_numbers(int depth, long window,
                            const std::string& emit_path) {
  Presentation p;
  check(gf_oracle_dual_numbers(depth, window, p.out()));
  return emit_presentation(p.get(), emit_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bilinear forms on Grothendieck groups of triangulated "
               "categories"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file, obj_a, obj_b;
  int triangle_index = 0;

  auto* validate = app.add_subcommand("validate", "validate a category file");
  validate->add_option("file", file)->required();
  validate->callback([&] { rc = cmd_validate(file); });

  auto* gram = app.add_subcommand("gram", "Gram matrix of the integer form");
  gram->add_option("file", file)->required();
  gram->callback([&] { rc = cmd_gram(file); });

  auto* kernel = app.add_subcommand(
      "kernel", "kernel of the form, closed form and brute force");
  kernel->add_option("file", file)->required();
  kernel->callback([&] { rc = cmd_kernel(file); });

  auto* prop31 = app.add_subcommand(
      "prop31", "verify AR-triangle orthogonality of the integer form");
  prop31->add_option("file", file)->required();
  prop31->callback([&] { rc = cmd_prop31(file); });

  auto* tform = app.add_subcommand("tform", "t-form of two objects");
  tform->add_option("file", file)->required();
  tform->add_option("obj_a", obj_a)->required();
  tform->add_option("obj_b", obj_b)->required();
  tform->callback([&] { rc = cmd_tform(file, obj_a, obj_b); });

  auto* dual =
      app.add_subcommand("dual", "dual element of a listed AR triangle");
  dual->add_option("file", file)->required();
  dual->add_option("triangle-index", triangle_index)->required();
  dual->callback([&] { rc = cmd_dual(file, triangle_index); });

  auto* hermitian =
      app.add_subcommand("hermitian", "Hermitian symmetry of the hom table");
  hermitian->add_option("file", file)->required();
  hermitian->callback([&] { rc = cmd_hermitian(file); });

  auto* euler =
      app.add_subcommand("euler", "t = -1 specialization of the t-form");
  euler->add_option("file", file)->required();
  euler->add_option("obj_a", obj_a)->required();
  euler->add_option("obj_b", obj_b)->required();
  euler->callback([&] { rc = cmd_euler(file, obj_a, obj_b); });

  auto* orbits =
      app.add_subcommand("orbits", "orbit module structure of the presentation");
  orbits->add_option("file", file)->required();
  orbits->callback([&] { rc = cmd_orbits(file); });

  auto* za = app.add_subcommand("za", "ZA-infinity component computations");
  za->require_subcommand(1);

  ZaFormOptions zopt;
  auto* za_form =
      za->add_subcommand("form", "pairing of two component objects");
  za_form->add_option("--self", zopt.self, "rim self pairing")->required();
  za_form->add_option("--cross", zopt.cross,
                      "rim pairing against a second component");
  za_form->add_option("m", zopt.m)->required();
  za_form->add_option("n", zopt.n)->required();
  za_form->add_option("--method", zopt.method)
      ->check(CLI::IsMember({"closed", "recurrence", "both"}));
  za_form->callback([&] { rc = cmd_za_form(zopt); });

  int depth = 0;
  auto* za_triangles =
      za->add_subcommand("triangles", "AR triangles of a component");
  za_triangles->add_option("depth", depth)->required();
  za_triangles->callback([&] { rc = cmd_za_triangles(depth); });

  std::string brick_self;
  long brick_max = 0;
  auto* za_brick = za->add_subcommand(
      "brick", "endomorphism dimensions along the strip to the rim");
  za_brick->add_option("--self", brick_self, "rim self pairing")->required();
  za_brick->add_option("--max", brick_max, "largest distance to scan")
      ->required();
  za_brick->callback([&] { rc = cmd_za_brick(brick_self, brick_max); });

  auto* oracle =
      app.add_subcommand("oracle", "first-principles category generators");
  oracle->require_subcommand(1);

  int uniserial_n = 0;
  std::string emit_path;
  auto* uniserial = oracle->add_subcommand(
      "uniserial", "stable module category of k[X]/(X^n)");
  uniserial->add_option("n", uniserial_n)->required();
  uniserial->add_option("--emit", emit_path, "write the category file here");
  uniserial->callback([&] { rc = cmd_oracle_uniserial(uniserial_n, emit_path); });

  int dn_depth = 0;
  long dn_window = 0;
  auto* dualnum = oracle->add_subcommand(
      "dual-numbers", "perfect-complex component over k[x]/(x^2)");
  dualnum->add_option("depth", dn_depth)->required();
  dualnum->add_option("--emit", emit_path, "write the category file here");
  dualnum->add_option("--window", dn_window,
                      "shift window for hom computations (default 2*depth+4)");
  dualnum->callback(
      [&] { rc = cmd_oracle_dual_numbers(dn_depth, dn_window, emit_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    return e.code;
  }
  return rc;
}
