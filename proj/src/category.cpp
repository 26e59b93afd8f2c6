#include "category.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace greenform {

namespace {

const LaurentPoly kZero;

[[noreturn]] void parse_fail(int line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  fail(ErrorCode::ParseError, os.str());
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::vector<std::string> hermitian_failures(const CategoryPresentation& p) {
  std::vector<std::string> failures;
  for (int a = 0; a < p.orbit_count(); ++a) {
    for (int b = 0; b < p.orbit_count(); ++b) {
      const LaurentPoly& ab = p.hom_poly(a, b);
      LaurentPoly ba_bar = p.hom_poly(b, a).bar();
      long g = p.pair_window(a, b);
      bool same = (g > 0) ? ab.cyclic_reduce(g) == ba_bar.cyclic_reduce(g)
                          : ab == ba_bar;
      if (!same) {
        std::ostringstream os;
        os << "hom(" << p.orbit(a).name << ", " << p.orbit(b).name
           << ") = " << ab.str() << " but the reverse hom conjugates to "
           << ba_bar.str();
        failures.push_back(os.str());
      }
    }
  }
  return failures;
}

int CategoryPresentation::add_orbit(const std::string& name, long period) {
  if (orbit_index_.count(name))
    fail(ErrorCode::InvalidArgument, "duplicate orbit name '" + name + "'");
  if (period < 0)
    fail(ErrorCode::InvalidArgument, "orbit period must be positive");
  int idx = static_cast<int>(orbits_.size());
  orbits_.push_back(OrbitDecl{name, period});
  orbit_index_[name] = idx;
  return idx;
}

int CategoryPresentation::orbit_index(const std::string& name) const {
  auto it = orbit_index_.find(name);
  return it == orbit_index_.end() ? -1 : it->second;
}

bool CategoryPresentation::has_infinite_orbit() const {
  return std::any_of(orbits_.begin(), orbits_.end(),
                     [](const OrbitDecl& o) { return o.infinite(); });
}

void CategoryPresentation::check_orbit(int i) const {
  if (i < 0 || i >= orbit_count())
    fail(ErrorCode::UnknownObject, "orbit index out of range");
}

long CategoryPresentation::pair_window(int a, int b) const {
  check_orbit(a);
  check_orbit(b);
  return std::gcd(orbits_[a].period, orbits_[b].period);
}

void CategoryPresentation::set_hom(int a, int b, const LaurentPoly& h) {
  long g = pair_window(a, b);
  if (g > 0 && !h.is_zero() && (h.min_exp() < 0 || h.max_exp() >= g)) {
    std::ostringstream os;
    os << "hom " << orbits_[a].name << " -> " << orbits_[b].name
       << " has exponents outside the cyclic window 0.." << g - 1;
    fail(ErrorCode::InvalidArgument, os.str());
  }
  if (h.is_zero())
    homs_.erase({a, b});
  else
    homs_[{a, b}] = h;
}

const LaurentPoly& CategoryPresentation::hom_poly(int a, int b) const {
  check_orbit(a);
  check_orbit(b);
  auto it = homs_.find({a, b});
  return it == homs_.end() ? kZero : it->second;
}

void CategoryPresentation::add_triangle(ARTriangle tr) {
  tr.x = canonical(tr.x);
  tr.z = canonical(tr.z);
  for (auto& y : tr.y) y = canonical(y);
  std::sort(tr.y.begin(), tr.y.end());
  triangles_.push_back(std::move(tr));
}

ObjectRef CategoryPresentation::canonical(const ObjectRef& r) const {
  check_orbit(r.orbit);
  const OrbitDecl& o = orbits_[r.orbit];
  if (o.infinite()) return r;
  long n = o.period;
  return ObjectRef{r.orbit, ((r.shift % n) + n) % n};
}

ObjectRef CategoryPresentation::shifted(const ObjectRef& r, long k) const {
  return canonical(ObjectRef{r.orbit, r.shift + k});
}

Int CategoryPresentation::hom_dim(const ObjectRef& a0,
                                  const ObjectRef& b0) const {
  ObjectRef a = canonical(a0), b = canonical(b0);
  long e = b.shift - a.shift;
  long g = pair_window(a.orbit, b.orbit);
  if (g > 0) e = ((e % g) + g) % g;
  return hom_poly(a.orbit, b.orbit).coeff(e);
}

std::vector<ObjectRef> CategoryPresentation::enumerate_objects() const {
  std::vector<ObjectRef> out;
  for (int i = 0; i < orbit_count(); ++i) {
    if (orbits_[i].infinite())
      fail(ErrorCode::InfiniteOrbit,
           "orbit '" + orbits_[i].name + "' is infinite; objects cannot be enumerated");
    for (long s = 0; s < orbits_[i].period; ++s) out.push_back({i, s});
  }
  return out;
}

std::string CategoryPresentation::ref_str(const ObjectRef& r) const {
  check_orbit(r.orbit);
  std::ostringstream os;
  os << orbits_[r.orbit].name;
  if (r.shift != 0) os << '[' << r.shift << ']';
  return os.str();
}

ObjectRef CategoryPresentation::parse_ref(const std::string& text) const {
  std::string s = trim(text);
  std::string name = s;
  long shift = 0;
  std::size_t br = s.find('[');
  if (br != std::string::npos) {
    if (s.back() != ']')
      fail(ErrorCode::ParseError, "malformed object reference '" + s + "'");
    name = s.substr(0, br);
    std::string inner = s.substr(br + 1, s.size() - br - 2);
    std::size_t used = 0;
    try {
      shift = std::stol(inner, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != inner.size() || inner.empty())
      fail(ErrorCode::ParseError, "malformed shift in '" + s + "'");
  }
  int idx = orbit_index(name);
  if (idx < 0) fail(ErrorCode::UnknownObject, "unknown orbit '" + name + "'");
  return canonical(ObjectRef{idx, shift});
}

ValidationReport CategoryPresentation::validate() const {
  ValidationReport report;
  auto issue = [&](const std::string& s) { report.issues.push_back(s); };

  for (const auto& [key, h] : homs_) {
    for (const auto& [e, c] : h.terms()) {
      if (c < 0) {
        std::ostringstream os;
        os << "negative hom dimension in " << orbits_[key.first].name << " -> "
           << orbits_[key.second].name << " at t^" << e;
        issue(os.str());
      }
    }
  }

  if (hyp42_) {
    for (const auto& [key, h] : homs_) {
      if (h.is_zero()) continue;
      const OrbitDecl& a = orbits_[key.first];
      const OrbitDecl& b = orbits_[key.second];
      if (!a.infinite() || !b.infinite()) {
        std::ostringstream os;
        os << "hypothesis-4.2 is set but hom " << a.name << " -> " << b.name
           << " is nonzero and touches a finite orbit (periodic homs have "
              "infinite support)";
        issue(os.str());
      }
    }
  }

  if (serre_trivial_) {
    for (const std::string& failure : hermitian_failures(*this))
      issue("serre-trivial is set but " + failure);
  }

  auto check_ref = [&](const ObjectRef& r, std::size_t idx) {
    if (r.orbit < 0 || r.orbit >= orbit_count()) {
      std::ostringstream os;
      os << "triangle " << idx << " references an undeclared orbit";
      issue(os.str());
    }
  };
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    check_ref(triangles_[i].x, i);
    check_ref(triangles_[i].z, i);
    for (const auto& y : triangles_[i].y) check_ref(y, i);
  }

  return report;
}

std::string CategoryPresentation::emit() const {
  std::ostringstream os;
  os << "category " << name_ << '\n';
  os << "flag hypothesis-4.2 " << (hyp42_ ? "true" : "false") << '\n';
  os << "flag serre-trivial " << (serre_trivial_ ? "true" : "false") << '\n';
  for (const auto& o : orbits_) {
    os << "orbit " << o.name << " period ";
    if (o.infinite())
      os << "inf";
    else
      os << o.period;
    os << '\n';
  }
  for (const auto& [key, h] : homs_)
    os << "hom " << orbits_[key.first].name << ' ' << orbits_[key.second].name
       << " : " << h.str() << '\n';
  for (const auto& tr : triangles_) {
    os << "triangle " << ref_str(tr.x) << " | ";
    if (tr.y.empty()) {
      os << '-';
    } else {
      for (std::size_t i = 0; i < tr.y.size(); ++i) {
        if (i) os << " + ";
        os << ref_str(tr.y[i]);
      }
    }
    os << " | " << ref_str(tr.z) << '\n';
  }
  return os.str();
}

CategoryPresentation CategoryPresentation::parse(const std::string& text) {
  CategoryPresentation p;
  bool saw_category = false;
  bool saw_hyp_flag = false, saw_serre_flag = false;
  std::istringstream input(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(input, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    std::vector<std::string> tok = split_ws(line);
    const std::string& kw = tok[0];

    if (!saw_category && kw != "category")
      parse_fail(line_no, "expected 'category <name>' first");

    if (kw == "category") {
      if (saw_category) parse_fail(line_no, "duplicate category line");
      if (tok.size() != 2) parse_fail(line_no, "expected 'category <name>'");
      p.set_name(tok[1]);
      saw_category = true;
    } else if (kw == "flag") {
      if (tok.size() != 3 || (tok[2] != "true" && tok[2] != "false"))
        parse_fail(line_no, "expected 'flag <name> <true|false>'");
      bool value = tok[2] == "true";
      if (tok[1] == "hypothesis-4.2") {
        if (saw_hyp_flag) parse_fail(line_no, "duplicate hypothesis-4.2 flag");
        saw_hyp_flag = true;
        p.set_hypothesis42(value);
      } else if (tok[1] == "serre-trivial") {
        if (saw_serre_flag) parse_fail(line_no, "duplicate serre-trivial flag");
        saw_serre_flag = true;
        p.set_serre_trivial(value);
      } else {
        parse_fail(line_no, "unknown flag '" + tok[1] + "'");
      }
    } else if (kw == "orbit") {
      if (tok.size() != 4 || tok[2] != "period")
        parse_fail(line_no, "expected 'orbit <name> period <n|inf>'");
      long period = 0;
      if (tok[3] != "inf") {
        std::size_t used = 0;
        try {
          period = std::stol(tok[3], &used);
        } catch (const std::exception&) {
          used = std::string::npos;
        }
        if (used != tok[3].size() || period < 1)
          parse_fail(line_no, "orbit period must be a positive integer or 'inf'");
      }
      try {
        p.add_orbit(tok[1], period);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
    } else if (kw == "hom") {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos)
        parse_fail(line_no, "expected 'hom <orbitA> <orbitB> : <laurent>'");
      std::vector<std::string> head = split_ws(line.substr(0, colon));
      if (head.size() != 3)
        parse_fail(line_no, "expected 'hom <orbitA> <orbitB> : <laurent>'");
      int a = p.orbit_index(head[1]);
      int b = p.orbit_index(head[2]);
      if (a < 0) parse_fail(line_no, "unknown orbit '" + head[1] + "'");
      if (b < 0) parse_fail(line_no, "unknown orbit '" + head[2] + "'");
      if (p.homs_.count({a, b}))
        parse_fail(line_no, "duplicate hom line for this orbit pair");
      try {
        p.set_hom(a, b, LaurentPoly::parse(line.substr(colon + 1)));
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
    } else if (kw == "triangle") {
      std::string rest = trim(line.substr(std::string("triangle").size()));
      std::vector<std::string> parts;
      std::size_t start = 0;
      while (true) {
        std::size_t bar = rest.find('|', start);
        if (bar == std::string::npos) {
          parts.push_back(trim(rest.substr(start)));
          break;
        }
        parts.push_back(trim(rest.substr(start, bar - start)));
        start = bar + 1;
      }
      if (parts.size() != 3)
        parse_fail(line_no, "expected 'triangle X | Y | Z'");
      ARTriangle tr;
      try {
        tr.x = p.parse_ref(parts[0]);
        tr.z = p.parse_ref(parts[2]);
        if (parts[1] != "-") {
          std::size_t ystart = 0;
          const std::string& ys = parts[1];
          while (true) {
            std::size_t plus = ys.find('+', ystart);
            std::string piece = plus == std::string::npos
                                    ? ys.substr(ystart)
                                    : ys.substr(ystart, plus - ystart);
            tr.y.push_back(p.parse_ref(piece));
            if (plus == std::string::npos) break;
            ystart = plus + 1;
          }
        }
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      p.add_triangle(std::move(tr));
    } else {
      parse_fail(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_category) parse_fail(line_no, "missing 'category' line");
  return p;
}

CategoryPresentation CategoryPresentation::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace greenform
