#include "rootsum/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rootsum/arith.hpp"
#include "rootsum/cyclotomic.hpp"

namespace rootsum {

SumsetTower::SumsetTower(std::shared_ptr<const FieldTable> field, std::uint64_t m)
    : field_(std::move(field)), roots_(roots_of_unity(*field_, m)) {
  const auto& F = *field_;
  const auto d = roots_.step;
  minus_one_coset_ = coset_of(F.minus_one());

  offsets_.reserve(d + 1);
  offsets_.push_back(0);
  std::vector<std::uint32_t> reached;
  for (std::uint64_t c = 0; c < d; ++c) {
    reached.clear();
    const auto base = Element::from_log(static_cast<std::uint32_t>(c));
    for (std::uint64_t j = 0; j < m; ++j) {
      const auto x = F.add(base, roots_.root(j));
      if (!x.is_zero()) reached.push_back(static_cast<std::uint32_t>(coset_of(x)));
    }
    std::sort(reached.begin(), reached.end());
    reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
    transitions_.insert(transitions_.end(), reached.begin(), reached.end());
    offsets_.push_back(transitions_.size());
  }

  SumsetLayer zero_layer;
  zero_layer.n = 0;
  zero_layer.cosets.resize(d);
  zero_layer.has_zero = true;
  layers_.push_back(std::move(zero_layer));
}

void SumsetTower::extend_to(std::size_t n) {
  const auto d = roots_.step;
  while (layers_.size() <= n) {
    const auto& cur = layers_.back();
    SumsetLayer next;
    next.n = cur.n + 1;
    if (cur.has_zero && cur.cosets.all()) {
      next.cosets = cur.cosets;
      next.has_zero = true;
    } else {
      next.cosets.resize(d);
      if (cur.has_zero) next.cosets.set(0);
      for (auto c = cur.cosets.find_first(); c != boost::dynamic_bitset<>::npos;
           c = cur.cosets.find_next(c)) {
        for (auto i = offsets_[c]; i < offsets_[c + 1]; ++i) next.cosets.set(transitions_[i]);
        if (c == minus_one_coset_) next.has_zero = true;
      }
    }
    layers_.push_back(std::move(next));
  }
}

bool SumsetTower::contains(std::size_t n, Element x) const {
  const auto& l = layer(n);
  return x.is_zero() ? l.has_zero : l.cosets.test(coset_of(x));
}

std::vector<std::uint64_t> SumsetTower::decompose(std::size_t n, Element target) const {
  if (!contains(n, target))
    throw Error(ErrorKind::NotAMember, "target not in layer " + std::to_string(n));
  std::vector<std::uint64_t> exponents;
  exponents.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    bool stepped = false;
    for (std::uint64_t j = 0; j < roots_.m; ++j) {
      const auto rest = field_->sub(target, roots_.root(j));
      if (contains(i - 1, rest)) {
        exponents.push_back(j);
        target = rest;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error(ErrorKind::InternalMismatch, "sumset layers are inconsistent");
  }
  std::sort(exponents.begin(), exponents.end());
  return exponents;
}

bool SumsetTower::monotone() const {
  const auto p = field_->characteristic();
  for (std::size_t n = 0; n + p < layers_.size(); ++n)
    if (!layers_[n].is_subset_of(layers_[n + p])) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool WeightSet::contains(std::uint64_t n) const {
  if (n < bound) return std::binary_search(members_below.begin(), members_below.end(), n);
  return n % period == 0 && n >= tail_start;
}

bool membership(const WeightSet& ws, std::uint64_t n) { return ws.contains(n); }

std::uint64_t exploration_bound(std::uint64_t p, std::uint64_t m_prime) {
  if (m_prime == 1) return p + 1;
  const auto q_min = prime_divisors(m_prime).front();
  return (p - 1) * (q_min - 1) + p + 1;
}

WeightAnalysis analyze_weights_in(std::shared_ptr<const FieldTable> field, std::uint64_t m) {
  const auto p = field->characteristic();
  const auto k = field->degree();
  SumsetTower tower(std::move(field), m);
  const auto bound = exploration_bound(p, m);
  tower.extend_to(bound + 2 * p);

  WeightSet ws;
  ws.p = p;
  ws.m = m;
  ws.m_prime = m;
  ws.k = k;
  ws.bound = bound;
  for (std::uint64_t n = 0; n < bound; ++n)
    if (tower.vanishes(n)) ws.members_below.push_back(n);
  ws.period = 0;
  for (auto n : ws.members_below) ws.period = std::gcd(ws.period, n);

  std::uint64_t tail = 0;
  for (std::uint64_t n = bound; n-- > 0;) {
    if (n % ws.period == 0 && !tower.vanishes(n)) {
      tail = n + ws.period;
      break;
    }
  }
  ws.tail_start = tail;

  for (std::uint64_t n = tail; n <= tower.height(); n += ws.period)
    if (!tower.vanishes(n))
      throw Error(ErrorKind::InternalMismatch,
                  "weight " + std::to_string(n) + " missing past the tail start");
  return {std::move(tower), std::move(ws)};
}

WeightAnalysis analyze_weights(std::uint64_t p, std::uint64_t m, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const auto m_prime = strip_p_part(p, m);
  const auto k = splitting_degree(p, m_prime);
  auto field = std::make_shared<const FieldTable>(build_field(p, k, std::nullopt, limits));
  auto analysis = analyze_weights_in(std::move(field), m_prime);
  analysis.weights.m = m;
  return analysis;
}

WeightSet compute_weight_set(std::uint64_t p, std::uint64_t m, const Limits& limits) {
  return analyze_weights(p, m, limits).weights;
}

Element evaluate_exponents(const SumsetTower& tower, const std::vector<std::uint64_t>& exponents) {
  Element sum = Element::zero();
  for (auto e : exponents) sum = tower.field().add(sum, tower.roots().root(e));
  return sum;
}

Certificate extract_certificate(const WeightAnalysis& analysis, std::uint64_t n) {
  const auto& ws = analysis.weights;
  const auto& tower = analysis.tower;
  if (!ws.contains(n))
    throw Error(ErrorKind::NotAMember, std::to_string(n) + " is not in W_" +
                                           std::to_string(ws.p) + "(" + std::to_string(ws.m) +
                                           ")");
  Certificate cert{ws.p, ws.m, ws.m_prime, n, {}};
  if (n <= tower.height()) {
    cert.exponents = tower.decompose(n, Element::zero());
  } else {
    // p copies of 1 vanish, so n = a + (n - a) with a a small member, a = n mod p.
    std::uint64_t a = n % ws.p;
    while (a <= tower.height() && !tower.vanishes(a)) a += ws.p;
    if (a > tower.height())
      throw Error(ErrorKind::InternalMismatch, "no small member congruent to the weight");
    cert.exponents = tower.decompose(a, Element::zero());
    cert.exponents.insert(cert.exponents.end(), n - a, 0);
    std::sort(cert.exponents.begin(), cert.exponents.end());
  }
  if (!evaluate_exponents(tower, cert.exponents).is_zero())
    throw Error(ErrorKind::InternalMismatch, "certificate does not vanish");
  return cert;
}

Certificate certificate(std::uint64_t p, std::uint64_t m, std::uint64_t n, const Limits& limits) {
  return extract_certificate(analyze_weights(p, m, limits), n);
}

// ---------------------------------------------------------------------------

namespace {

class MinimalSumSearch {
 public:
  MinimalSumSearch(const FieldTable& field, const RootGroup& roots, unsigned wmax,
                   std::uint64_t budget)
      : field_(field), roots_(roots), wmax_(wmax), budget_(budget) {}

  std::vector<std::vector<std::uint64_t>> run() {
    if (wmax_ == 0) return {};
    // Every rotation class has a representative containing exponent 0.
    boost::dynamic_bitset<> sums(field_.order());
    sums.set(index(field_.one()));
    current_ = {0};
    descend(field_.one(), sums);
    return {found_.begin(), found_.end()};
  }

 private:
  std::size_t index(Element x) const { return x.is_zero() ? 0 : std::size_t{x.log()} + 1; }
  Element element(std::size_t i) const {
    return i == 0 ? Element::zero() : Element::from_log(static_cast<std::uint32_t>(i - 1));
  }

  // `sums` holds the sums of all nonempty sub-multisets of current_; it never
  // contains zero here, and sum(current_) != 0.
  void descend(Element sum, const boost::dynamic_bitset<>& sums) {
    for (std::uint64_t e = current_.back(); e < roots_.m; ++e) {
      if (++nodes_ > budget_)
        throw Error(ErrorKind::EnumerationCapExceeded, "minimal sum search exceeded node budget");
      const auto x = roots_.root(e);
      const auto total = field_.add(sum, x);
      current_.push_back(e);
      if (total.is_zero()) {
        found_.insert(canonical(current_));
      } else if (current_.size() < wmax_) {
        auto next = sums;
        for (auto i = sums.find_first(); i != boost::dynamic_bitset<>::npos; i = sums.find_next(i))
          next.set(index(field_.add(element(i), x)));
        next.set(index(x));
        if (!next.test(0)) descend(total, next);
      }
      current_.pop_back();
    }
  }

  std::vector<std::uint64_t> canonical(const std::vector<std::uint64_t>& exps) const {
    std::vector<std::uint64_t> best;
    for (std::uint64_t shift = 0; shift < roots_.m; ++shift) {
      std::vector<std::uint64_t> rotated;
      rotated.reserve(exps.size());
      for (auto e : exps) rotated.push_back((e + shift) % roots_.m);
      std::sort(rotated.begin(), rotated.end());
      if (best.empty() || rotated < best) best = std::move(rotated);
    }
    return best;
  }

  const FieldTable& field_;
  const RootGroup& roots_;
  unsigned wmax_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> current_;
  std::set<std::vector<std::uint64_t>> found_;
};

}  // namespace

std::vector<std::vector<std::uint64_t>> minimal_vanishing_sums(std::uint64_t p, std::uint64_t m,
                                                               unsigned wmax,
                                                               const Limits& limits) {
  if (wmax > limits.enumeration_cap)
    throw Error(ErrorKind::EnumerationCapExceeded,
                "weight " + std::to_string(wmax) + " above enumeration cap " +
                    std::to_string(limits.enumeration_cap));
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const auto m_prime = strip_p_part(p, m);
  const auto field = build_field(p, splitting_degree(p, m_prime), std::nullopt, limits);
  const auto roots = roots_of_unity(field, m_prime);
  return MinimalSumSearch(field, roots, wmax, limits.enumeration_nodes).run();
}

}  // namespace rootsum
