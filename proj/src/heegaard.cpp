#include "kup/heegaard.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace kup {

namespace {

struct Occurrence {
  bool positive;
  size_t line;  // 0 when unknown
};

void check_side(const std::vector<Circle>& circles, const char* side_name,
                unsigned genus, std::map<std::string, Occurrence>& occs,
                bool first_side) {
  if (circles.size() != genus)
    throw diagram_error(std::string("expected ") + std::to_string(genus) +
                        " " + side_name + " circles, got " +
                        std::to_string(circles.size()));
  std::set<std::string> seen;
  for (const auto& c : circles)
    for (const auto& p : c.points) {
      if (!seen.insert(p.label).second)
        throw diagram_error("point '" + p.label + "' occurs twice among " +
                            side_name + " circles");
      if (first_side) {
        occs[p.label] = {p.positive, 0};
      } else {
        auto it = occs.find(p.label);
        if (it == occs.end())
          throw diagram_error("point '" + p.label + "' appears on a " +
                              side_name + " circle only");
        if (it->second.positive != p.positive)
          throw diagram_error("point '" + p.label +
                              "' has different signs on its upper and lower "
                              "circles");
        occs.erase(it);
      }
    }
}

std::string fresh_label(const HeegaardDiagram& d, std::set<std::string>& used,
                        const std::string& stem) {
  if (used.empty())
    for (const auto& c : d.upper)
      for (const auto& p : c.points) used.insert(p.label);
  for (unsigned k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (used.insert(cand).second) return cand;
  }
}

Circle* find_circle_with(std::vector<Circle>& circles,
                         const std::string& label, size_t& pos) {
  for (auto& c : circles)
    for (size_t i = 0; i < c.points.size(); ++i)
      if (c.points[i].label == label) {
        pos = i;
        return &c;
      }
  return nullptr;
}

}  // namespace

void validate_diagram(const HeegaardDiagram& d) {
  if (d.genus < 1) throw diagram_error("genus must be at least 1");
  std::map<std::string, Occurrence> occs;
  check_side(d.upper, "upper", d.genus, occs, true);
  check_side(d.lower, "lower", d.genus, occs, false);
  if (!occs.empty())
    throw diagram_error("point '" + occs.begin()->first +
                        "' appears on an upper circle only");
}

HeegaardDiagram parse_diagram(const std::string& text) {
  HeegaardDiagram d;
  bool have_genus = false;
  std::istringstream is(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [lineno](const std::string& msg) {
      throw diagram_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "genus") {
      if (have_genus) fail("duplicate genus line");
      long g;
      if (!(ls >> g) || g < 1) fail("genus must be a positive integer");
      d.genus = (unsigned)g;
      have_genus = true;
    } else if (key == "upper" || key == "lower") {
      if (!have_genus) fail("genus line must come first");
      std::string name;
      if (!(ls >> name) || name.empty() || name.back() != ':')
        fail("expected 'upper <name>:' or 'lower <name>:'");
      Circle c;
      c.name = name.substr(0, name.size() - 1);
      std::string tok;
      while (ls >> tok) {
        if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
          fail("bad point token '" + tok + "' (need <label>+ or <label>-)");
        c.points.push_back({tok.substr(0, tok.size() - 1), tok.back() == '+'});
      }
      (key == "upper" ? d.upper : d.lower).push_back(std::move(c));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!have_genus) throw diagram_error("missing genus line");
  validate_diagram(d);
  return d;
}

std::string serialize_diagram(const HeegaardDiagram& d) {
  std::ostringstream os;
  os << "genus " << d.genus << "\n";
  auto emit = [&os](const char* side, const std::vector<Circle>& circles) {
    for (const auto& c : circles) {
      os << side << " " << c.name << ":";
      for (const auto& p : c.points)
        os << " " << p.label << (p.positive ? "+" : "-");
      os << "\n";
    }
  };
  emit("upper", d.upper);
  emit("lower", d.lower);
  return os.str();
}

DiagramPermutation extract_permutation(const HeegaardDiagram& d) {
  DiagramPermutation out;
  std::map<std::string, size_t> up_pos;  // 1-based position in upper order
  size_t idx = 0;
  for (const auto& c : d.upper)
    for (const auto& p : c.points) {
      up_pos[p.label] = ++idx;
      out.upper_kappas.push_back(p.positive ? 0 : 1);
    }
  for (const auto& c : d.lower)
    for (const auto& p : c.points) {
      out.sigma.push_back(up_pos.at(p.label));
      out.lower_kappas.push_back(p.positive ? 0 : 1);
    }
  return out;
}

HeegaardDiagram builtin_diagram(const std::string& spec) {
  if (spec == "s1xs2") {
    HeegaardDiagram d;
    d.genus = 1;
    d.upper.push_back({"u", {}});
    d.lower.push_back({"l", {}});
    return d;
  }
  if (spec.rfind("lens:", 0) == 0) {
    long p;
    try {
      p = std::stol(spec.substr(5));
    } catch (const std::exception&) {
      throw diagram_error("bad lens parameter in '" + spec + "'");
    }
    if (p < 1) throw diagram_error("lens parameter must be >= 1");
    HeegaardDiagram d;
    d.genus = 1;
    Circle u{"u", {}}, l{"l", {}};
    for (long k = 1; k <= p; ++k) {
      u.points.push_back({std::to_string(k), true});
      l.points.push_back({std::to_string(k), true});
    }
    d.upper.push_back(std::move(u));
    d.lower.push_back(std::move(l));
    return d;
  }
  if (spec == "poincare") {
    return parse_diagram(
        "genus 2\n"
        "upper u1: 1+ 2+ 3+ 4+ a- 6- c-\n"
        "upper u2: b- 7- d+ e+ 5-\n"
        "lower l1: 1+ 2+ 3+ 4+ 5- 6- 7-\n"
        "lower l2: a- b- c- d+ e+\n");
  }
  throw diagram_error("unknown builtin diagram '" + spec + "'");
}

HeegaardDiagram flip_orientation(const HeegaardDiagram& d, CircleSide side,
                                 size_t i) {
  auto& circles = side == CircleSide::upper ? d.upper : d.lower;
  if (i < 1 || i > circles.size())
    throw diagram_error("circle index out of range");
  HeegaardDiagram out = d;
  Circle& c =
      (side == CircleSide::upper ? out.upper : out.lower)[i - 1];
  std::reverse(c.points.begin(), c.points.end());
  std::set<std::string> labels;
  for (auto& p : c.points) {
    p.positive = !p.positive;
    labels.insert(p.label);
  }
  auto& other = side == CircleSide::upper ? out.lower : out.upper;
  for (auto& oc : other)
    for (auto& p : oc.points)
      if (labels.count(p.label)) p.positive = !p.positive;
  validate_diagram(out);
  return out;
}

HeegaardDiagram shift_basepoint(const HeegaardDiagram& d, CircleSide side,
                                size_t i, size_t steps) {
  auto& circles = side == CircleSide::upper ? d.upper : d.lower;
  if (i < 1 || i > circles.size())
    throw diagram_error("circle index out of range");
  HeegaardDiagram out = d;
  Circle& c = (side == CircleSide::upper ? out.upper : out.lower)[i - 1];
  if (!c.points.empty())
    std::rotate(c.points.begin(),
                c.points.begin() + (steps % c.points.size()), c.points.end());
  return out;
}

HeegaardDiagram swap_circles(const HeegaardDiagram& d, CircleSide side,
                             size_t i) {
  auto& circles = side == CircleSide::upper ? d.upper : d.lower;
  if (i < 1 || i + 1 > circles.size())
    throw diagram_error("circle index out of range for swap");
  HeegaardDiagram out = d;
  auto& cs = side == CircleSide::upper ? out.upper : out.lower;
  std::swap(cs[i - 1], cs[i]);
  return out;
}

HeegaardDiagram stabilize(const HeegaardDiagram& d) {
  HeegaardDiagram out = d;
  std::set<std::string> used;
  std::string lbl = fresh_label(d, used, "s");
  out.genus += 1;
  out.upper.push_back({"u" + std::to_string(out.upper.size() + 1),
                       {{lbl, true}}});
  out.lower.push_back({"l" + std::to_string(out.lower.size() + 1),
                       {{lbl, true}}});
  validate_diagram(out);
  return out;
}

HeegaardDiagram two_point_insert(const HeegaardDiagram& d, size_t ui,
                                 size_t lj, size_t upos, size_t lpos) {
  if (ui < 1 || ui > d.upper.size() || lj < 1 || lj > d.lower.size())
    throw diagram_error("circle index out of range");
  HeegaardDiagram out = d;
  Circle& u = out.upper[ui - 1];
  Circle& l = out.lower[lj - 1];
  if (upos > u.points.size() || lpos > l.points.size())
    throw diagram_error("insertion position out of range");
  std::set<std::string> used;
  std::string a = fresh_label(d, used, "n");
  std::string b = fresh_label(d, used, "n");
  u.points.insert(u.points.begin() + upos, {{a, true}, {b, false}});
  l.points.insert(l.points.begin() + lpos, {{a, true}, {b, false}});
  validate_diagram(out);
  return out;
}

HeegaardDiagram two_point_cancel(const HeegaardDiagram& d,
                                 const std::string& a, const std::string& b) {
  HeegaardDiagram out = d;
  for (auto* circles : {&out.upper, &out.lower}) {
    bool done = false;
    for (auto& c : *circles) {
      for (size_t i = 0; i + 1 < c.points.size(); ++i) {
        if (c.points[i].label == a && c.points[i + 1].label == b) {
          if (c.points[i].positive == c.points[i + 1].positive)
            throw diagram_error("two-point pair must have opposite signs");
          c.points.erase(c.points.begin() + i, c.points.begin() + i + 2);
          done = true;
          break;
        }
      }
      if (done) break;
    }
    if (!done)
      throw diagram_error("points '" + a + "', '" + b +
                          "' are not adjacent in that order on a circle");
  }
  validate_diagram(out);
  return out;
}

HeegaardDiagram handle_slide(const HeegaardDiagram& d, CircleSide side,
                             size_t i, size_t j) {
  auto& circles = side == CircleSide::upper ? d.upper : d.lower;
  if (i < 1 || i > circles.size() || j < 1 || j > circles.size())
    throw diagram_error("circle index out of range");
  if (i == j) throw diagram_error("cannot slide a circle past itself");
  HeegaardDiagram out = d;
  auto& cs = side == CircleSide::upper ? out.upper : out.lower;
  auto& other = side == CircleSide::upper ? out.lower : out.upper;
  std::set<std::string> used;
  for (const auto& c : d.lower)
    for (const auto& p : c.points) used.insert(p.label);
  for (const auto& p : circles[j - 1].points) {
    std::string copy = fresh_label(d, used, p.label + "_");
    cs[i - 1].points.push_back({copy, p.positive});
    size_t pos = 0;
    Circle* oc = find_circle_with(other, p.label, pos);
    if (!oc) throw diagram_error("internal: point missing on other side");
    // Copy sits adjacent to the original: before it when positive, after it
    // when negative.
    oc->points.insert(oc->points.begin() + (p.positive ? pos : pos + 1),
                      {copy, p.positive});
  }
  validate_diagram(out);
  return out;
}

HeegaardDiagram random_diagram(uint64_t seed, unsigned genus,
                               unsigned max_points) {
  std::mt19937_64 rng(seed);
  HeegaardDiagram d;
  d.genus = genus;
  unsigned n = std::uniform_int_distribution<unsigned>(0, max_points)(rng);
  std::vector<std::string> labels;
  for (unsigned k = 1; k <= n; ++k) labels.push_back("p" + std::to_string(k));
  std::vector<bool> signs;
  for (unsigned k = 0; k < n; ++k)
    signs.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
  auto make_side = [&](const char* stem) {
    std::vector<Circle> circles(genus);
    for (unsigned c = 0; c < genus; ++c)
      circles[c].name = stem + std::to_string(c + 1);
    for (unsigned k = 0; k < n; ++k) {
      unsigned c = std::uniform_int_distribution<unsigned>(0, genus - 1)(rng);
      circles[c].points.push_back({labels[k], signs[k]});
    }
    for (auto& c : circles)
      std::shuffle(c.points.begin(), c.points.end(), rng);
    return circles;
  };
  d.upper = make_side("u");
  d.lower = make_side("l");
  validate_diagram(d);
  return d;
}

}  // namespace kup
