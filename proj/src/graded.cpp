#include "kup/graded.hpp"

#include <algorithm>
#include <map>

namespace kup {

Degree GradingGroup::reduce(Degree d) const {
  if (d.size() != orders.size())
    throw scalar_error("degree rank mismatch");
  for (size_t i = 0; i < d.size(); ++i) {
    d[i] %= orders[i];
    if (d[i] < 0) d[i] += orders[i];
  }
  return d;
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

Degree GradingGroup::negate(const Degree& a) const {
  Degree r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

Bicharacter::Bicharacter(const GradingGroup& group,
                         std::vector<std::vector<Scalar>> generator_table)
    : table_(std::move(generator_table)) {
  size_t k = group.rank();
  if (table_.size() != k)
    throw scalar_error("bicharacter table rank mismatch");
  for (const auto& row : table_)
    if (row.size() != k) throw scalar_error("bicharacter table rank mismatch");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (!(table_[i][j] * table_[j][i]).is_one())
        throw scalar_error("bicharacter violates chi(g,h)chi(h,g)=1");
      if (!table_[i][j].pow(group.orders[i]).is_one() ||
          !table_[i][j].pow(group.orders[j]).is_one())
        throw scalar_error("bicharacter not well defined mod cyclic orders");
    }
}

Scalar Bicharacter::operator()(const Degree& g, const Degree& h) const {
  Scalar r(1);
  for (size_t i = 0; i < table_.size(); ++i) {
    if (g[i] == 0) continue;
    for (size_t j = 0; j < table_.size(); ++j) {
      if (h[j] == 0) continue;
      r *= table_[i][j].pow((long)g[i] * h[j]);
    }
  }
  return r;
}

std::shared_ptr<const Context> Context::vect() {
  static auto ctx = make(GradingGroup{{1}}, {{Scalar(1)}});
  return ctx;
}

std::shared_ptr<const Context> Context::super() {
  static auto ctx = make(GradingGroup{{2}}, {{Scalar(-1)}});
  return ctx;
}

std::shared_ptr<const Context> Context::make(
    GradingGroup g, std::vector<std::vector<Scalar>> generator_table) {
  Bicharacter chi(g, std::move(generator_table));
  return std::make_shared<const Context>(Context{std::move(g), std::move(chi)});
}

GradedSpace::GradedSpace(ContextPtr ctx, std::vector<Degree> degrees)
    : ctx_(std::move(ctx)), degrees_(std::move(degrees)) {
  for (auto& d : degrees_) d = ctx_->group.reduce(std::move(d));
}

GradedSpace GradedSpace::unit(ContextPtr ctx) {
  auto z = ctx->group.zero();
  return GradedSpace(std::move(ctx), {z});
}

GradedSpace GradedSpace::line(ContextPtr ctx, Degree d) {
  return GradedSpace(std::move(ctx), {std::move(d)});
}

GradedSpace GradedSpace::dual() const {
  std::vector<Degree> neg(degrees_.size());
  for (size_t i = 0; i < degrees_.size(); ++i)
    neg[i] = ctx_->group.negate(degrees_[i]);
  return GradedSpace(ctx_, std::move(neg));
}

bool GradedSpace::operator==(const GradedSpace& o) const {
  if (ctx_ != o.ctx_ && !(ctx_ && o.ctx_ && ctx_->group == o.ctx_->group))
    return false;
  return degrees_ == o.degrees_;
}

GradedSpace tensor(const GradedSpace& x, const GradedSpace& y) {
  if (!(x.context()->group == y.context()->group))
    throw scalar_error("tensor: mismatched grading groups");
  std::vector<Degree> deg;
  deg.reserve(x.dim() * y.dim());
  for (size_t i = 0; i < x.dim(); ++i)
    for (size_t j = 0; j < y.dim(); ++j)
      deg.push_back(x.context()->group.add(x.degree(i), y.degree(j)));
  return GradedSpace(x.context(), std::move(deg));
}

GradedMorphism::GradedMorphism(GradedSpace src, GradedSpace dst)
    : src_(std::move(src)), dst_(std::move(dst)), cols_(src_.dim()) {}

GradedMorphism::GradedMorphism(GradedSpace src, GradedSpace dst,
                               std::vector<SparseCol> cols)
    : src_(std::move(src)), dst_(std::move(dst)), cols_(std::move(cols)) {
  if (cols_.size() != src_.dim())
    throw scalar_error("morphism: column count mismatch");
  normalize();
  check_grading();
}

GradedMorphism GradedMorphism::identity(const GradedSpace& x) {
  GradedMorphism m(x, x);
  for (size_t i = 0; i < x.dim(); ++i)
    m.cols_[i].emplace_back((uint32_t)i, Scalar(1));
  return m;
}

Scalar GradedMorphism::entry(size_t i, size_t j) const {
  for (const auto& [r, v] : cols_[j])
    if (r == i) return v;
  return Scalar(0);
}

void GradedMorphism::set(size_t i, size_t j, Scalar v) {
  for (auto& [r, val] : cols_[j])
    if (r == i) {
      val = std::move(v);
      return;
    }
  cols_[j].emplace_back((uint32_t)i, std::move(v));
}

void GradedMorphism::normalize() {
  for (auto& c : cols_) {
    std::sort(c.begin(), c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseCol out;
    for (auto& [r, v] : c) {
      if (!out.empty() && out.back().first == r)
        out.back().second += v;
      else
        out.emplace_back(r, std::move(v));
    }
    std::erase_if(out, [](const auto& p) { return p.second.is_zero(); });
    c = std::move(out);
  }
}

void GradedMorphism::check_grading() const {
  for (size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, v] : cols_[j])
      if (dst_.degree(i) != src_.degree(j))
        throw scalar_error("morphism is not grading-preserving");
}

GradedMorphism GradedMorphism::operator*(const GradedMorphism& f) const {
  if (!(f.dst_ == src_)) throw scalar_error("compose: shape mismatch");
  GradedMorphism out(f.src_, dst_);
  for (size_t j = 0; j < f.cols_.size(); ++j) {
    std::map<uint32_t, Scalar> acc;
    for (const auto& [k, v] : f.cols_[j])
      for (const auto& [i, w] : cols_[k]) {
        auto it = acc.find(i);
        if (it == acc.end())
          acc.emplace(i, v * w);
        else
          it->second += v * w;
      }
    for (auto& [i, v] : acc)
      if (!v.is_zero()) out.cols_[j].emplace_back(i, std::move(v));
  }
  return out;
}

GradedMorphism GradedMorphism::operator+(const GradedMorphism& o) const {
  if (!(src_ == o.src_) || !(dst_ == o.dst_))
    throw scalar_error("add: shape mismatch");
  GradedMorphism out(src_, dst_);
  out.cols_ = cols_;
  for (size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, v] : o.cols_[j]) out.cols_[j].emplace_back(i, v);
  out.normalize();
  return out;
}

GradedMorphism GradedMorphism::operator-(const GradedMorphism& o) const {
  return *this + o.scaled(Scalar(-1));
}

GradedMorphism GradedMorphism::scaled(const Scalar& s) const {
  GradedMorphism out(src_, dst_);
  if (s.is_zero()) return out;
  out.cols_ = cols_;
  for (auto& c : out.cols_)
    for (auto& [i, v] : c) v *= s;
  return out;
}

bool GradedMorphism::operator==(const GradedMorphism& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && !first_difference(o).has_value();
}

std::optional<size_t> GradedMorphism::first_difference(
    const GradedMorphism& o) const {
  size_t n = std::min(cols_.size(), o.cols_.size());
  for (size_t j = 0; j < n; ++j)
    if (cols_[j] != o.cols_[j]) return j;
  if (cols_.size() != o.cols_.size()) return n;
  return std::nullopt;
}

bool GradedMorphism::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

GradedMorphism tensor(const GradedMorphism& f, const GradedMorphism& g) {
  GradedSpace src = tensor(f.source(), g.source());
  GradedSpace dst = tensor(f.target(), g.target());
  GradedMorphism out(src, dst);
  size_t gs = g.source().dim(), gt = g.target().dim();
  for (size_t jf = 0; jf < f.source().dim(); ++jf)
    for (size_t jg = 0; jg < gs; ++jg)
      for (const auto& [rf, vf] : f.col(jf))
        for (const auto& [rg, vg] : g.col(jg))
          out.set(rf * gt + rg, jf * gs + jg, vf * vg);
  out.normalize();
  return out;
}

GradedMorphism symmetry(const GradedSpace& x, const GradedSpace& y) {
  GradedSpace src = tensor(x, y), dst = tensor(y, x);
  const auto& ctx = *x.context();
  GradedMorphism out(src, dst);
  for (size_t i = 0; i < x.dim(); ++i)
    for (size_t j = 0; j < y.dim(); ++j)
      out.set(j * x.dim() + i, i * y.dim() + j,
              ctx.koszul(x.degree(i), y.degree(j)));
  out.normalize();
  return out;
}

GradedMorphism permutation_morphism(const GradedSpace& a,
                                    const std::vector<size_t>& sigma) {
  size_t n = sigma.size();
  {
    std::vector<bool> seen(n, false);
    for (size_t v : sigma) {
      if (v >= n || seen[v])
        throw scalar_error("permutation_morphism: not a permutation");
      seen[v] = true;
    }
  }
  GradedSpace pw = GradedSpace::unit(a.context());
  for (size_t i = 0; i < n; ++i) pw = tensor(pw, a);
  size_t d = a.dim();
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= d;
  GradedMorphism out(pw, pw);
  const auto& ctx = *a.context();
  std::vector<size_t> tup(n), ptup(n);
  for (size_t col = 0; col < total; ++col) {
    size_t rem = col;
    for (size_t i = n; i-- > 0;) {
      tup[i] = rem % d;
      rem /= d;
    }
    Scalar sign(1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j])
          sign *= ctx.koszul(a.degree(tup[i]), a.degree(tup[j]));
    for (size_t i = 0; i < n; ++i) ptup[sigma[i]] = tup[i];
    size_t row = 0;
    for (size_t i = 0; i < n; ++i) row = row * d + ptup[i];
    out.set(row, col, sign);
  }
  out.normalize();
  return out;
}

DualData dual_data(const GradedSpace& x) {
  DualData dd;
  dd.dual = x.dual();
  auto ctx = x.context();
  GradedSpace unit = GradedSpace::unit(ctx);
  size_t d = x.dim();

  GradedMorphism lev(tensor(dd.dual, x), unit);
  for (size_t i = 0; i < d; ++i) lev.set(0, i * d + i, Scalar(1));
  lev.normalize();

  GradedMorphism lcoev(unit, tensor(x, dd.dual));
  for (size_t i = 0; i < d; ++i) lcoev.set(i * d + i, 0, Scalar(1));
  lcoev.normalize();

  dd.rev = lev * symmetry(x, dd.dual);
  dd.rcoev = symmetry(x, dd.dual) * lcoev;
  dd.lev = std::move(lev);
  dd.lcoev = std::move(lcoev);
  return dd;
}

Scalar trace(const GradedMorphism& f) {
  if (!(f.source() == f.target()))
    throw scalar_error("trace: not an endomorphism");
  const auto& x = f.source();
  const auto& ctx = *x.context();
  Scalar t(0);
  for (size_t i = 0; i < x.dim(); ++i)
    t += ctx.koszul(x.degree(i), ctx.group.negate(x.degree(i))) * f.entry(i, i);
  return t;
}

Scalar dim(const GradedSpace& x) {
  return trace(GradedMorphism::identity(x));
}

Scalar norm_on_invertible(const GradedMorphism& f) {
  if (f.source().dim() != 1 || !(f.source() == f.target()))
    throw scalar_error("norm: object is not one-dimensional");
  return f.entry(0, 0);
}

Scalar sigma_of(const GradedSpace& line) {
  if (line.dim() != 1)
    throw scalar_error("sigma_of: object is not one-dimensional");
  const auto& ctx = *line.context();
  Scalar s = ctx.koszul(line.degree(0), line.degree(0));
  if (!(s * s).is_one())
    throw scalar_error("sigma_of: sigma^2 != 1");
  return s;
}

}  // namespace kup
