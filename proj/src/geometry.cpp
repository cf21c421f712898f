#include "gqt/geometry.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace gqt {

void normalize(PartialLinearSpace& pls) {
  for (auto& l : pls.lines) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  std::sort(pls.lines.begin(), pls.lines.end());
  pls.lines.erase(std::unique(pls.lines.begin(), pls.lines.end()), pls.lines.end());
}

std::string PlsWitness::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kBadLine:
      os << "line " << line_a << " has fewer than 2 points or an out-of-range point";
      break;
    case Kind::kSharedPair:
      os << "lines " << line_a << " and " << line_b << " share " << count << " points";
      break;
    case Kind::kLineSize:
      os << "line " << line_a << " has " << count << " points, expected " << expected;
      break;
    case Kind::kPointDegree:
      os << "point " << point << " lies on " << count << " lines, expected " << expected;
      break;
  }
  return os.str();
}

namespace {

std::vector<std::vector<std::size_t>> lines_through(const PartialLinearSpace& pls) {
  std::vector<std::vector<std::size_t>> through(pls.num_points);
  for (std::size_t li = 0; li < pls.lines.size(); ++li)
    for (Vertex p : pls.lines[li]) through[p].push_back(li);
  return through;
}

std::size_t intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace

PlsCheck validate_pls(const PartialLinearSpace& pls) {
  PlsCheck res;
  auto fail = [&](PlsWitness w) {
    res.witness = w;
    return res;
  };
  for (std::size_t li = 0; li < pls.lines.size(); ++li) {
    const auto& l = pls.lines[li];
    bool bad = l.size() < 2;
    for (std::size_t k = 0; k < l.size() && !bad; ++k)
      bad = l[k] >= pls.num_points || (k > 0 && l[k] <= l[k - 1]);
    if (bad) return fail({PlsWitness::Kind::kBadLine, li, 0, 0, l.size(), 0});
  }
  if (pls.lines.empty() || pls.num_points == 0)
    return fail({PlsWitness::Kind::kBadLine, 0, 0, 0, 0, 0});

  const auto through = lines_through(pls);
  for (std::size_t p = 0; p < pls.num_points; ++p) {
    const auto& ls = through[p];
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = a + 1; b < ls.size(); ++b) {
        const std::size_t c = intersection_size(pls.lines[ls[a]], pls.lines[ls[b]]);
        if (c > 1) return fail({PlsWitness::Kind::kSharedPair, ls[a], ls[b], p, c, 1});
      }
  }
  const std::size_t line_size = pls.lines[0].size();
  for (std::size_t li = 0; li < pls.lines.size(); ++li)
    if (pls.lines[li].size() != line_size)
      return fail({PlsWitness::Kind::kLineSize, li, 0, 0, pls.lines[li].size(), line_size});
  const std::size_t degree = through[0].size();
  for (std::size_t p = 0; p < pls.num_points; ++p)
    if (through[p].size() != degree || degree == 0)
      return fail({PlsWitness::Kind::kPointDegree, 0, 0, p, through[p].size(), degree});

  GqOrder order{static_cast<int>(line_size) - 1, static_cast<int>(degree) - 1};
  if (pls.order && !(*pls.order == order))
    return fail({PlsWitness::Kind::kLineSize, 0, 0, 0, line_size,
                 static_cast<std::size_t>(pls.order->s + 1)});
  res.order = order;
  return res;
}

Graph point_graph(const PartialLinearSpace& pls) {
  GraphBuilder b(pls.num_points);
  for (const auto& l : pls.lines)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) b.add_edge(l[i], l[j]);
  return std::move(b).build();
}

std::optional<GqWitness> check_gq_axiom(const PartialLinearSpace& pls) {
  const Graph g = point_graph(pls);
  std::vector<Word> line_row(g.words());
  for (std::size_t li = 0; li < pls.lines.size(); ++li) {
    std::fill(line_row.begin(), line_row.end(), 0);
    for (Vertex p : pls.lines[li]) set_bit(line_row, p);
    for (Vertex p = 0; p < pls.num_points; ++p) {
      if (test_bit(line_row, p)) continue;
      const std::size_t c = popcount_and(g.row(p), line_row);
      if (c != 1) return GqWitness{p, li, c};
    }
  }
  return std::nullopt;
}

PartialLinearSpace dualize(const PartialLinearSpace& pls) {
  const PlsCheck chk = validate_pls(pls);
  if (!chk.ok()) throw GraphError("dualize: invalid partial linear space: " + chk.witness->describe());
  PartialLinearSpace d;
  d.num_points = pls.lines.size();
  d.lines.resize(pls.num_points);
  for (std::size_t li = 0; li < pls.lines.size(); ++li)
    for (Vertex p : pls.lines[li]) d.lines[p].push_back(static_cast<Vertex>(li));
  d.order = GqOrder{chk.order->t, chk.order->s};
  normalize(d);
  return d;
}

void write_incidence(std::ostream& out, const PartialLinearSpace& pls) {
  out << "p " << pls.num_points << " l " << pls.lines.size() << '\n';
  for (const auto& l : pls.lines) {
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
    out << '\n';
  }
}

PartialLinearSpace read_incidence(std::istream& in) {
  std::string tag_p, tag_l;
  std::size_t np = 0, nl = 0;
  if (!(in >> tag_p >> np >> tag_l >> nl) || tag_p != "p" || tag_l != "l")
    throw GraphError("incidence: bad header");
  PartialLinearSpace pls;
  pls.num_points = np;
  std::string line;
  std::getline(in, line);
  while (pls.lines.size() < nl && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Vertex> pts;
    long long v;
    while (ls >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= np) throw GraphError("incidence: point out of range");
      pts.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw GraphError("incidence: malformed line");
    pls.lines.push_back(std::move(pts));
  }
  if (pls.lines.size() != nl) throw GraphError("incidence: expected " + std::to_string(nl) + " lines");
  return pls;
}

namespace {

using Vec = std::vector<Elem>;

// Points of PG(d-1, q) as vectors whose first nonzero coordinate is 1.
class ProjectiveSpace {
 public:
  ProjectiveSpace(FieldPtr f, int dim) : f_(std::move(f)), dim_(dim) {
    int total = 1;
    for (int i = 0; i < dim_; ++i) total *= f_->q();
    for (int code = 1; code < total; ++code) {
      Vec v = decode(code);
      if (normalized(v) == v) {
        index_[code] = static_cast<Vertex>(points_.size());
        points_.push_back(std::move(v));
      }
    }
  }

  const Field& field() const { return *f_; }
  const std::vector<Vec>& points() const { return points_; }

  Vec normalized(Vec v) const {
    for (const Elem& x : v) {
      if (x.v != 0) {
        const Elem s = f_->inv(x);
        for (Elem& y : v) y = f_->mul(y, s);
        break;
      }
    }
    return v;
  }

  Vertex index_of(const Vec& v) const { return index_.at(encode(normalized(v))); }

  // The q+1 points on the line through p and r.
  std::vector<Vertex> line_through(const Vec& p, const Vec& r) const {
    std::vector<Vertex> pts{index_of(r)};
    for (int k = 0; k < f_->q(); ++k) {
      const Elem lambda = f_->element(k);
      Vec w(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) w[i] = f_->add(p[i], f_->mul(lambda, r[i]));
      pts.push_back(index_of(w));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
  }

 private:
  Vec decode(int code) const {
    Vec v(static_cast<std::size_t>(dim_));
    for (int i = dim_ - 1; i >= 0; --i) {
      v[i] = f_->element(code % f_->q());
      code /= f_->q();
    }
    return v;
  }
  int encode(const Vec& v) const {
    int code = 0;
    for (const Elem& x : v) code = code * f_->q() + x.v;
    return code;
  }

  FieldPtr f_;
  int dim_;
  std::vector<Vec> points_;
  std::map<int, Vertex> index_;
};

FieldPtr field_of_order(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r == 1) return Field::make(p, e);
  }
  throw FieldError("no field of order " + std::to_string(q));
}

// Lines of totally isotropic/singular pairs: every pair (P, R) with
// P, R in `points` and bilinear(P, R) == 0 spans a line contained in the set.
template <typename Bilinear>
PartialLinearSpace polar_space(const ProjectiveSpace& ps, const std::vector<Vertex>& points,
                               Bilinear&& bilinear, GqOrder order) {
  std::map<Vertex, Vertex> relabel;
  for (Vertex i = 0; i < points.size(); ++i) relabel[points[i]] = i;
  std::set<std::vector<Vertex>> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec& p = ps.points()[points[i]];
      const Vec& r = ps.points()[points[j]];
      if (bilinear(p, r).v != 0) continue;
      std::vector<Vertex> l;
      for (Vertex x : ps.line_through(p, r)) {
        auto it = relabel.find(x);
        if (it == relabel.end()) throw GraphError("polar space: line leaves the point set");
        l.push_back(it->second);
      }
      std::sort(l.begin(), l.end());
      lines.insert(std::move(l));
    }
  }
  PartialLinearSpace pls;
  pls.num_points = points.size();
  pls.lines.assign(lines.begin(), lines.end());
  pls.order = order;
  normalize(pls);
  return pls;
}

}  // namespace

PartialLinearSpace build_symplectic_gq(int q) {
  if (q < 2 || q > 5) throw FieldError("symplectic GQ supports q in 2..5");
  const FieldPtr f = field_of_order(q);
  const ProjectiveSpace ps(f, 4);
  std::vector<Vertex> all(ps.points().size());
  for (Vertex i = 0; i < all.size(); ++i) all[i] = i;
  auto form = [&](const Vec& x, const Vec& y) {
    Elem r = f->sub(f->mul(x[0], y[1]), f->mul(x[1], y[0]));
    r = f->add(r, f->sub(f->mul(x[2], y[3]), f->mul(x[3], y[2])));
    return r;
  };
  return polar_space(ps, all, form, GqOrder{q, q});
}

PartialLinearSpace build_elliptic_gq(int q) {
  if (q != 2 && q != 3) throw FieldError("elliptic GQ supports q in {2,3}");
  const FieldPtr f = Field::make(q, 1);
  // x^2 + c1 x + c0, the default irreducible quadratic over GF(q).
  const FieldPtr ext = Field::make(q, 2);
  const Elem c0 = f->from_int(ext->modulus()[0]);
  const Elem c1 = f->from_int(ext->modulus()[1]);
  const ProjectiveSpace ps(f, 6);
  auto quad = [&](const Vec& x) {
    Elem r = f->add(f->mul(x[0], x[1]), f->mul(x[2], x[3]));
    r = f->add(r, f->mul(x[4], x[4]));
    r = f->add(r, f->mul(c1, f->mul(x[4], x[5])));
    return f->add(r, f->mul(c0, f->mul(x[5], x[5])));
  };
  auto polar = [&](const Vec& x, const Vec& y) {
    Vec s(6);
    for (int i = 0; i < 6; ++i) s[i] = f->add(x[i], y[i]);
    return f->sub(f->sub(quad(s), quad(x)), quad(y));
  };
  std::vector<Vertex> singular;
  for (Vertex i = 0; i < ps.points().size(); ++i)
    if (quad(ps.points()[i]).v == 0) singular.push_back(i);
  return polar_space(ps, singular, polar, GqOrder{q, q * q});
}

PartialLinearSpace build_t2star_gq() {
  const FieldPtr f = Field::make(2, 2);
  const int q = f->q();
  std::vector<Vec> directions;
  for (int k = 0; k < q; ++k) {
    const Elem t = f->element(k);
    directions.push_back({f->one(), t, f->mul(t, t)});
  }
  directions.push_back({f->zero(), f->one(), f->zero()});
  directions.push_back({f->zero(), f->zero(), f->one()});

  auto index_of = [&](const Vec& v) { return static_cast<Vertex>((v[0].v * q + v[1].v) * q + v[2].v); };
  std::set<std::vector<Vertex>> lines;
  for (int code = 0; code < q * q * q; ++code) {
    const Vec p{f->element(code / (q * q)), f->element((code / q) % q), f->element(code % q)};
    for (const Vec& d : directions) {
      std::vector<Vertex> l;
      for (int k = 0; k < q; ++k) {
        const Elem lambda = f->element(k);
        Vec w(3);
        for (int i = 0; i < 3; ++i) w[i] = f->add(p[i], f->mul(lambda, d[i]));
        l.push_back(index_of(w));
      }
      std::sort(l.begin(), l.end());
      lines.insert(std::move(l));
    }
  }
  PartialLinearSpace pls;
  pls.num_points = static_cast<std::size_t>(q * q * q);
  pls.lines.assign(lines.begin(), lines.end());
  pls.order = GqOrder{q - 1, q + 1};
  normalize(pls);
  return pls;
}

QClan payne_qclan() {
  QClan clan;
  clan.field = Field::make(5, 1);
  const Field& f = *clan.field;
  const Elem three = f.from_int(3);
  for (int k = 0; k < f.q(); ++k) {
    const Elem t = f.element(k);
    Matrix2 m{clan.field, {t, f.mul(three, f.pow(t, 2)), f.zero(), f.mul(three, f.pow(t, 3))}};
    clan.matrices.push_back(m);
  }
  return clan;
}

namespace {

// Group of order q^5 on triples (alpha, c, beta), alpha, beta in GF(q)^2:
//   (a, c, b) * (a', c', b') = (a + a', c + c' + b.a', b + b').
class CliqueGroup {
 public:
  struct El {
    Elem a0, a1, c, b0, b1;
  };

  explicit CliqueGroup(FieldPtr f) : f_(std::move(f)), q_(f_->q()) {}

  int size() const { return q_ * q_ * q_ * q_ * q_; }

  int index(const El& g) const {
    return (((g.a0.v * q_ + g.a1.v) * q_ + g.c.v) * q_ + g.b0.v) * q_ + g.b1.v;
  }
  El element(int idx) const {
    El g;
    g.b1 = f_->element(idx % q_);
    idx /= q_;
    g.b0 = f_->element(idx % q_);
    idx /= q_;
    g.c = f_->element(idx % q_);
    idx /= q_;
    g.a1 = f_->element(idx % q_);
    idx /= q_;
    g.a0 = f_->element(idx);
    return g;
  }
  El mul(const El& x, const El& y) const {
    const Field& f = *f_;
    El r;
    r.a0 = f.add(x.a0, y.a0);
    r.a1 = f.add(x.a1, y.a1);
    r.b0 = f.add(x.b0, y.b0);
    r.b1 = f.add(x.b1, y.b1);
    const Elem dot = f.add(f.mul(x.b0, y.a0), f.mul(x.b1, y.a1));
    r.c = f.add(f.add(x.c, y.c), dot);
    return r;
  }

 private:
  FieldPtr f_;
  int q_;
};

}  // namespace

PartialLinearSpace build_flock_gq(const QClan& clan) {
  if (!clan.field || static_cast<int>(clan.matrices.size()) != clan.field->q())
    throw GraphError("flock GQ: clan must hold one matrix per field element");
  if (!anisotropic_difference_check(clan.matrices))
    throw GraphError("flock GQ: clan differences are not anisotropic");
  const Field& f = *clan.field;
  const int q = f.q();
  const CliqueGroup grp(clan.field);
  const int ng = grp.size();
  const int nsym = q + 1;  // member index q stands for infinity

  // Point numbering: group elements, then tangent cosets (t, invariant), then infinity.
  const Vertex coset_base = static_cast<Vertex>(ng);
  const Vertex infinity = static_cast<Vertex>(ng + nsym * q * q);

  auto sym = [&](int t) {
    const Matrix2& k = clan.matrices[static_cast<std::size_t>(t)];
    return k + k.transpose();
  };
  // Invariant labelling the tangent coset A*(t)g that contains g.
  auto tangent_coset = [&](int t, const CliqueGroup::El& g) -> Vertex {
    int inv = 0;
    if (t == q) {
      inv = g.a0.v * q + g.a1.v;
    } else {
      const Matrix2 m = sym(t);
      const Elem u0 = f.sub(g.b0, f.add(f.mul(g.a0, m.a()), f.mul(g.a1, m.c())));
      const Elem u1 = f.sub(g.b1, f.add(f.mul(g.a0, m.b()), f.mul(g.a1, m.d())));
      inv = u0.v * q + u1.v;
    }
    return coset_base + static_cast<Vertex>(t * q * q + inv);
  };
  // Element of member A(t) indexed by x in GF(q)^2.
  auto member = [&](int t, Elem x0, Elem x1) {
    CliqueGroup::El a{};
    if (t == q) {
      a.a0 = a.a1 = a.c = f.zero();
      a.b0 = x0;
      a.b1 = x1;
      return a;
    }
    const Matrix2& k = clan.matrices[static_cast<std::size_t>(t)];
    const Matrix2 m = sym(t);
    a.a0 = x0;
    a.a1 = x1;
    a.c = k.quadratic(x0, x1);
    a.b0 = f.add(f.mul(x0, m.a()), f.mul(x1, m.c()));
    a.b1 = f.add(f.mul(x0, m.b()), f.mul(x1, m.d()));
    return a;
  };

  PartialLinearSpace pls;
  pls.num_points = static_cast<std::size_t>(infinity) + 1;
  for (int t = 0; t < nsym; ++t) {
    std::vector<char> seen(static_cast<std::size_t>(ng), 0);
    for (int gi = 0; gi < ng; ++gi) {
      if (seen[gi]) continue;
      const CliqueGroup::El g = grp.element(gi);
      std::vector<Vertex> line;
      for (int x0 = 0; x0 < q; ++x0)
        for (int x1 = 0; x1 < q; ++x1) {
          const int h = grp.index(grp.mul(member(t, f.element(x0), f.element(x1)), g));
          seen[h] = 1;
          line.push_back(static_cast<Vertex>(h));
        }
      line.push_back(tangent_coset(t, g));
      pls.lines.push_back(std::move(line));
    }
    std::vector<Vertex> symbol_line;
    for (int inv = 0; inv < q * q; ++inv)
      symbol_line.push_back(coset_base + static_cast<Vertex>(t * q * q + inv));
    symbol_line.push_back(infinity);
    pls.lines.push_back(std::move(symbol_line));
  }
  pls.order = GqOrder{q * q, q};
  normalize(pls);

  const PlsCheck chk = validate_pls(pls);
  if (!chk.ok()) throw GraphError("flock GQ: not a partial linear space: " + chk.witness->describe());
  if (auto w = check_gq_axiom(pls))
    throw GraphError("flock GQ: axiom fails at point " + std::to_string(w->point) + ", line " +
                     std::to_string(w->line) + " (" + std::to_string(w->count) + " collinear)");
  return pls;
}

}  // namespace gqt
