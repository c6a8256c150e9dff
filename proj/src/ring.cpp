#include "zdg/ring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace zdg {

namespace {

std::string macron(long k) { return std::to_string(k) + "̄"; }

void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

} // namespace

FiniteRing::FiniteRing(int n, std::vector<int> add, std::vector<int> mul, int zero, int one,
                       RingSpec origin, std::vector<std::string> labels)
    : n_(n), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one),
      origin_(std::move(origin)), labels_(std::move(labels)) {
    require(n_ >= 1, Errc::invalid_input, "ring order must be positive");
    require(add_.size() == size_t(n_) * n_ && mul_.size() == size_t(n_) * n_,
            Errc::invalid_input, "operation tables must be NxN");
    for (int v : add_) require(0 <= v && v < n_, Errc::invalid_input, "add table entry out of range");
    for (int v : mul_) require(0 <= v && v < n_, Errc::invalid_input, "mul table entry out of range");
    require(0 <= zero_ && zero_ < n_ && 0 <= one_ && one_ < n_,
            Errc::invalid_input, "zero/one id out of range");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    require(labels_.size() == size_t(n_), Errc::invalid_input, "label list must have N entries");
    neg_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (add_[size_t(a) * n_ + b] == zero_) { neg_[a] = b; break; }
}

int FiniteRing::pow(int a, long e) const {
    int r = one_;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

RingPtr build_zn(long n) {
    require(n >= 1, Errc::invalid_input, "build_zn: modulus must be >= 1");
    int N = int(n);
    std::vector<int> add(size_t(N) * N), mul(size_t(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            add[size_t(a) * N + b] = int((a + b) % N);
            mul[size_t(a) * N + b] = int((long(a) * b) % N);
        }
    std::vector<std::string> labels;
    labels.reserve(N);
    for (int i = 0; i < N; ++i) labels.push_back(macron(i));
    RingSpec spec;
    spec.kind = RingSpec::Kind::Zn;
    spec.n = n;
    return std::make_shared<FiniteRing>(N, std::move(add), std::move(mul), 0, N == 1 ? 0 : 1,
                                        std::move(spec), std::move(labels));
}

int product_encode(const std::vector<RingPtr>& factors, const std::vector<int>& tuple) {
    int id = 0;
    for (size_t i = 0; i < factors.size(); ++i) id = id * factors[i]->order() + tuple[i];
    return id;
}

std::vector<int> product_decode(const std::vector<RingPtr>& factors, int id) {
    std::vector<int> t(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        t[i] = id % factors[i]->order();
        id /= factors[i]->order();
    }
    return t;
}

RingPtr build_product(const std::vector<RingPtr>& factors) {
    require(!factors.empty(), Errc::invalid_input, "build_product: empty factor list");
    long order = 1;
    for (const auto& f : factors) {
        order *= f->order();
        require(order <= 100000, Errc::budget_exceeded, "build_product: order too large");
    }
    int N = int(order);
    std::vector<std::vector<int>> tuples(N);
    for (int e = 0; e < N; ++e) tuples[e] = product_decode(factors, e);
    std::vector<int> add(size_t(N) * N), mul(size_t(N) * N);
    std::vector<int> t(factors.size());
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            for (size_t i = 0; i < factors.size(); ++i) t[i] = factors[i]->add(tuples[a][i], tuples[b][i]);
            add[size_t(a) * N + b] = product_encode(factors, t);
            for (size_t i = 0; i < factors.size(); ++i) t[i] = factors[i]->mul(tuples[a][i], tuples[b][i]);
            mul[size_t(a) * N + b] = product_encode(factors, t);
        }
    std::vector<int> zt(factors.size()), ot(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        zt[i] = factors[i]->zero();
        ot[i] = factors[i]->one();
    }
    std::vector<std::string> labels;
    labels.reserve(N);
    for (int e = 0; e < N; ++e) {
        std::string l = "(";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) l += ",";
            l += factors[i]->label(tuples[e][i]);
        }
        l += ")";
        labels.push_back(std::move(l));
    }
    RingSpec spec;
    spec.kind = RingSpec::Kind::Product;
    for (const auto& f : factors) spec.factors.push_back(f->origin());
    return std::make_shared<FiniteRing>(N, std::move(add), std::move(mul),
                                        product_encode(factors, zt), product_encode(factors, ot),
                                        std::move(spec), std::move(labels));
}

RingPtr build_presented(const RingSpec& spec) {
    require(spec.kind == RingSpec::Kind::Presented, Errc::invalid_input, "not a presented spec");
    const auto& d = spec.orders;
    size_t m = d.size();
    require(m >= 1, Errc::invalid_input, "presented: need at least one generator");
    long order = 1;
    for (int di : d) {
        require(di >= 1, Errc::invalid_input, "presented: generator orders must be >= 1");
        order *= di;
        require(order <= 100000, Errc::budget_exceeded, "presented: order too large");
    }
    auto in_range = [&](const std::vector<int>& v) {
        if (v.size() != m) return false;
        for (size_t i = 0; i < m; ++i)
            if (v[i] < 0 || v[i] >= d[i]) return false;
        return true;
    };
    require(in_range(spec.one), Errc::invalid_input, "presented: one-vector out of range");
    require(spec.mul.size() == m, Errc::invalid_input, "presented: structure constants must be m x m");
    for (size_t i = 0; i < m; ++i) {
        require(spec.mul[i].size() == m, Errc::invalid_input, "presented: structure constants must be m x m");
        for (size_t j = 0; j < m; ++j) {
            require(in_range(spec.mul[i][j]), Errc::invalid_input,
                    "presented: structure constant out of range");
            require(spec.mul[i][j] == spec.mul[j][i], Errc::invalid_input,
                    "presented: structure constants must be symmetric");
        }
    }

    int N = int(order);
    std::vector<long> stride(m, 1);
    for (size_t i = m - 1; i-- > 0;) stride[i] = stride[i + 1] * d[i + 1];
    auto enc = [&](const std::vector<int>& t) {
        long id = 0;
        for (size_t i = 0; i < m; ++i) id += t[i] * stride[i];
        return int(id);
    };
    auto dec = [&](int id) {
        std::vector<int> t(m);
        for (size_t i = 0; i < m; ++i) {
            t[i] = int((id / stride[i]) % d[i]);
        }
        return t;
    };

    std::vector<int> add(size_t(N) * N), mul(size_t(N) * N);
    std::vector<int> acc(m);
    for (int a = 0; a < N; ++a) {
        auto ta = dec(a);
        for (int b = 0; b < N; ++b) {
            auto tb = dec(b);
            for (size_t i = 0; i < m; ++i) acc[i] = (ta[i] + tb[i]) % d[i];
            add[size_t(a) * N + b] = enc(acc);
            std::fill(acc.begin(), acc.end(), 0);
            for (size_t i = 0; i < m; ++i) {
                if (!ta[i]) continue;
                for (size_t j = 0; j < m; ++j) {
                    long c = long(ta[i]) * tb[j];
                    if (!c) continue;
                    for (size_t k = 0; k < m; ++k)
                        acc[k] = int((acc[k] + c * spec.mul[i][j][k]) % d[k]);
                }
            }
            mul[size_t(a) * N + b] = enc(acc);
        }
    }

    std::vector<std::string> labels = spec.labels;
    if (labels.empty()) {
        labels.reserve(N);
        for (int e = 0; e < N; ++e) {
            auto t = dec(e);
            std::string l = "(";
            for (size_t i = 0; i < m; ++i) {
                if (i) l += ",";
                l += std::to_string(t[i]);
            }
            l += ")";
            labels.push_back(std::move(l));
        }
    }

    auto ring = std::make_shared<FiniteRing>(N, std::move(add), std::move(mul), 0, enc(spec.one),
                                             spec, std::move(labels));
    auto report = validate_ring(*ring);
    if (!report.pass) {
        std::string msg = "presented ring fails " + report.failed_axiom + " at (";
        for (size_t i = 0; i < report.witness.size(); ++i)
            msg += (i ? "," : "") + std::to_string(report.witness[i]);
        msg += ")";
        throw Error(Errc::invalid_input, msg);
    }
    return ring;
}

RingPtr build_table(const RingSpec& spec) {
    require(spec.kind == RingSpec::Kind::Table, Errc::invalid_input, "not a table spec");
    size_t N = spec.add_table.size();
    require(N >= 1 && spec.mul_table.size() == N, Errc::invalid_input, "table: bad dimensions");
    std::vector<int> add, mul;
    add.reserve(N * N);
    mul.reserve(N * N);
    for (size_t r = 0; r < N; ++r) {
        require(spec.add_table[r].size() == N && spec.mul_table[r].size() == N,
                Errc::invalid_input, "table: bad row length");
        for (size_t c = 0; c < N; ++c) {
            add.push_back(spec.add_table[r][c]);
            mul.push_back(spec.mul_table[r][c]);
        }
    }
    return std::make_shared<FiniteRing>(int(N), std::move(add), std::move(mul), spec.zero,
                                        spec.one_id, spec, spec.labels);
}

RingPtr build_ring(const RingSpec& spec) {
    switch (spec.kind) {
    case RingSpec::Kind::Zn: {
        auto r = build_zn(spec.n);
        if (!spec.labels.empty()) {
            require(spec.labels.size() == size_t(r->order()), Errc::invalid_input,
                    "labels must have N entries");
            std::vector<int> add(size_t(r->order()) * r->order()), mul(add.size());
            for (int a = 0; a < r->order(); ++a)
                for (int b = 0; b < r->order(); ++b) {
                    add[size_t(a) * r->order() + b] = r->add(a, b);
                    mul[size_t(a) * r->order() + b] = r->mul(a, b);
                }
            return std::make_shared<FiniteRing>(r->order(), std::move(add), std::move(mul),
                                                r->zero(), r->one(), spec, spec.labels);
        }
        return r;
    }
    case RingSpec::Kind::Product: {
        std::vector<RingPtr> fs;
        for (const auto& f : spec.factors) fs.push_back(build_ring(f));
        return build_product(fs);
    }
    case RingSpec::Kind::Presented:
        return build_presented(spec);
    case RingSpec::Kind::Table:
        return build_table(spec);
    }
    throw Error(Errc::invalid_input, "unknown ring spec kind");
}

ValidationReport validate_ring(const FiniteRing& A, const Budgets& budgets) {
    ValidationReport rep;
    const int n = A.order();
    auto fail = [&](const std::string& axiom, std::vector<int> w) {
        rep.pass = false;
        rep.failed_axiom = axiom;
        rep.witness = std::move(w);
    };

    if (n > 1 && A.zero() == A.one()) {
        fail("zero/one distinctness", {});
        return rep;
    }
    for (int a = 0; a < n && rep.pass; ++a) {
        if (A.add(a, A.zero()) != a) fail("additive identity", {a});
        else if (A.neg(a) < 0) fail("additive inverse", {a});
        else if (A.mul(a, A.one()) != a) fail("multiplicative identity", {a});
    }
    for (int a = 0; a < n && rep.pass; ++a)
        for (int b = 0; b < n && rep.pass; ++b) {
            if (A.add(a, b) != A.add(b, a)) fail("additive commutativity", {a, b});
            else if (A.mul(a, b) != A.mul(b, a)) fail("multiplicative commutativity", {a, b});
        }
    if (!rep.pass) return rep;

    auto triple = [&](int a, int b, int c) {
        if (A.add(A.add(a, b), c) != A.add(a, A.add(b, c))) {
            fail("additive associativity", {a, b, c});
            return;
        }
        if (A.mul(A.mul(a, b), c) != A.mul(a, A.mul(b, c))) {
            fail("multiplicative associativity", {a, b, c});
            return;
        }
        if (A.mul(a, A.add(b, c)) != A.add(A.mul(a, b), A.mul(a, c)))
            fail("distributivity", {a, b, c});
    };

    if (n <= budgets.validate_exhaustive_max) {
        rep.mode = "exhaustive";
        for (int a = 0; a < n && rep.pass; ++a)
            for (int b = 0; b < n && rep.pass; ++b)
                for (int c = 0; c < n && rep.pass; ++c) {
                    triple(a, b, c);
                    ++rep.triples_checked;
                }
    } else {
        rep.mode = "sampled";
        std::mt19937_64 rng(0x5eedba5eULL ^ uint64_t(n));
        std::uniform_int_distribution<int> dist(0, n - 1);
        for (long long i = 0; i < budgets.validate_samples && rep.pass; ++i) {
            triple(dist(rng), dist(rng), dist(rng));
            ++rep.triples_checked;
        }
    }
    return rep;
}

ElementClasses classify_elements(const FiniteRing& A) {
    const int n = A.order();
    ElementClasses ec;
    ec.is_unit.assign(n, 0);
    ec.is_zero_divisor.assign(n, 0);
    ec.is_nilpotent.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (A.mul(a, b) == A.one()) ec.is_unit[a] = 1;
            if (b != A.zero() && A.mul(a, b) == A.zero()) ec.is_zero_divisor[a] = 1;
        }
        int x = a;
        for (int k = 1; k <= n; ++k) {
            if (x == A.zero()) { ec.is_nilpotent[a] = 1; break; }
            x = A.mul(x, a);
        }
    }
    ec.is_zero_divisor[A.zero()] = 1;
    for (int a = 0; a < n; ++a) {
        if (ec.is_unit[a]) ec.units.push_back(a);
        if (ec.is_zero_divisor[a]) ec.zero_divisors.push_back(a);
        if (ec.is_nilpotent[a]) ec.nilpotents.push_back(a);
        if (ec.is_zero_divisor[a] && a != A.zero()) ec.dstar.push_back(a);
    }
    return ec;
}

bool IdealSet::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

std::optional<std::string> ideal_violation(const FiniteRing& A, const std::vector<int>& members) {
    Bitset in = bitset_of(A.order(), members);
    if (!in.test(A.zero())) return "does not contain zero";
    for (int a : members)
        for (int b : members)
            if (!in.test(A.add(a, b)))
                return "not closed under addition at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")";
    for (int r = 0; r < A.order(); ++r)
        for (int a : members)
            if (!in.test(A.mul(r, a)))
                return "not closed under external multiplication at (" + std::to_string(r) + "," +
                       std::to_string(a) + ")";
    return std::nullopt;
}

IdealSet make_ideal(const FiniteRing& A, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (auto why = ideal_violation(A, members))
        throw Error(Errc::invalid_input, "not an ideal: " + *why);
    return IdealSet{&A, std::move(members)};
}

IdealSet annihilator(const FiniteRing& A, int a) {
    std::vector<int> m;
    for (int x = 0; x < A.order(); ++x)
        if (A.mul(x, a) == A.zero()) m.push_back(x);
    return IdealSet{&A, std::move(m)};
}

IdealSet principal_ideal(const FiniteRing& A, int a) {
    Bitset b(A.order());
    for (int x = 0; x < A.order(); ++x) b.set(A.mul(x, a));
    return IdealSet{&A, b.members()};
}

std::optional<std::array<int, 2>> hom_violation(const RingHom& h) {
    const FiniteRing& A = *h.source;
    const FiniteRing& B = *h.target;
    if (h.map[A.one()] != B.one()) return std::array<int, 2>{-1, -1};
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < A.order(); ++b) {
            if (h.map[A.add(a, b)] != B.add(h.map[a], h.map[b])) return std::array<int, 2>{a, b};
            if (h.map[A.mul(a, b)] != B.mul(h.map[a], h.map[b])) return std::array<int, 2>{a, b};
        }
    return std::nullopt;
}

RingHom make_ring_hom(RingPtr src, RingPtr tgt, std::vector<int> map) {
    require(map.size() == size_t(src->order()), Errc::invalid_input, "hom map size mismatch");
    for (int v : map)
        require(0 <= v && v < tgt->order(), Errc::invalid_input, "hom map entry out of range");
    RingHom h{std::move(src), std::move(tgt), std::move(map)};
    if (auto w = hom_violation(h))
        throw Error(Errc::invalid_input, "not a ring homomorphism at (" + std::to_string((*w)[0]) +
                                             "," + std::to_string((*w)[1]) + ")");
    return h;
}

RingHom identity_hom(RingPtr a) {
    std::vector<int> m(a->order());
    for (int i = 0; i < a->order(); ++i) m[i] = i;
    return RingHom{a, a, std::move(m)};
}

RingHom compose(const RingHom& g, const RingHom& f) {
    require(f.target.get() == g.source.get(), Errc::invalid_input, "compose: hom chain mismatch");
    std::vector<int> m(f.map.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
    return RingHom{f.source, g.target, std::move(m)};
}

bool is_bijective(const RingHom& h) {
    if (h.source->order() != h.target->order()) return false;
    std::vector<char> seen(h.target->order(), 0);
    for (int v : h.map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

QuotientResult quotient_ring(RingPtr A, const IdealSet& I) {
    require(I.ring == A.get(), Errc::invalid_input, "quotient_ring: ideal of a different ring");
    if (auto why = ideal_violation(*A, I.members))
        throw Error(Errc::invalid_input, "quotient_ring: " + *why);
    const int n = A->order();
    std::vector<int> class_of(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (class_of[a] >= 0) continue;
        int c = int(reps.size());
        reps.push_back(a);
        for (int i : I.members) class_of[A->add(a, i)] = c;
    }
    const int q = int(reps.size());
    require(q * I.size() == n, Errc::internal, "quotient_ring: cosets do not tile the ring");
    std::vector<int> add(size_t(q) * q), mul(size_t(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            add[size_t(x) * q + y] = class_of[A->add(reps[x], reps[y])];
            mul[size_t(x) * q + y] = class_of[A->mul(reps[x], reps[y])];
        }
    std::vector<std::string> labels;
    labels.reserve(q);
    for (int x = 0; x < q; ++x) labels.push_back("[" + A->label(reps[x]) + "]");
    RingSpec spec;
    spec.kind = RingSpec::Kind::Table;
    spec.add_table.assign(q, std::vector<int>(q));
    spec.mul_table.assign(q, std::vector<int>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            spec.add_table[x][y] = add[size_t(x) * q + y];
            spec.mul_table[x][y] = mul[size_t(x) * q + y];
        }
    spec.zero = class_of[A->zero()];
    spec.one_id = class_of[A->one()];
    spec.labels = labels;
    auto Q = std::make_shared<FiniteRing>(q, std::move(add), std::move(mul), class_of[A->zero()],
                                          class_of[A->one()], std::move(spec), std::move(labels));
    return QuotientResult{Q, make_ring_hom(A, Q, class_of)};
}

Localization localize(RingPtr A, const std::vector<int>& S_in) {
    std::set<int> sset(S_in.begin(), S_in.end());
    require(!sset.empty(), Errc::invalid_input, "localize: empty multiplicative set");
    require(sset.count(A->one()), Errc::invalid_input, "localize: S must contain 1");
    for (int s : sset) {
        require(0 <= s && s < A->order(), Errc::invalid_input, "localize: element out of range");
        for (int t : sset)
            require(sset.count(A->mul(s, t)), Errc::invalid_input,
                    "localize: S not multiplicatively closed at (" + std::to_string(s) + "," +
                        std::to_string(t) + ")");
    }
    std::vector<int> S(sset.begin(), sset.end());
    const int n = A->order();
    const int k = int(S.size());

    // a/s == b/t iff u*(a*t - b*s) == 0 for some u in S
    auto equiv = [&](int a, int s, int b, int t) {
        int d = A->sub(A->mul(a, t), A->mul(b, s));
        for (int u : S)
            if (A->mul(u, d) == A->zero()) return true;
        return false;
    };

    std::vector<std::vector<int>> frac(n, std::vector<int>(k, -1));
    std::vector<std::pair<int, int>> reps; // representative (a, s)
    for (int a = 0; a < n; ++a)
        for (int si = 0; si < k; ++si) {
            int cls = -1;
            for (size_t c = 0; c < reps.size(); ++c)
                if (equiv(a, S[si], reps[c].first, reps[c].second)) { cls = int(c); break; }
            if (cls < 0) {
                cls = int(reps.size());
                reps.emplace_back(a, S[si]);
            }
            frac[a][si] = cls;
        }

    const int q = int(reps.size());
    int one_index = int(std::find(S.begin(), S.end(), A->one()) - S.begin());
    std::vector<int> add(size_t(q) * q), mul(size_t(q) * q);
    // class of an arbitrary fraction (a, s): locate s in S, then look up
    auto cls_of = [&](int a, int s) {
        int si = int(std::lower_bound(S.begin(), S.end(), s) - S.begin());
        return frac[a][si];
    };
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            auto [a, s] = reps[x];
            auto [b, t] = reps[y];
            add[size_t(x) * q + y] = cls_of(A->add(A->mul(a, t), A->mul(b, s)), A->mul(s, t));
            mul[size_t(x) * q + y] = cls_of(A->mul(a, b), A->mul(s, t));
        }
    std::vector<std::string> labels;
    labels.reserve(q);
    for (auto [a, s] : reps) labels.push_back(A->label(a) + "/" + A->label(s));
    RingSpec spec;
    spec.kind = RingSpec::Kind::Table;
    spec.add_table.assign(q, std::vector<int>(q));
    spec.mul_table.assign(q, std::vector<int>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            spec.add_table[x][y] = add[size_t(x) * q + y];
            spec.mul_table[x][y] = mul[size_t(x) * q + y];
        }
    spec.zero = frac[A->zero()][one_index];
    spec.one_id = frac[A->one()][one_index];
    spec.labels = labels;
    auto L = std::make_shared<FiniteRing>(q, std::move(add), std::move(mul),
                                          frac[A->zero()][one_index], frac[A->one()][one_index],
                                          std::move(spec), std::move(labels));
    std::vector<int> phimap(n);
    for (int a = 0; a < n; ++a) phimap[a] = frac[a][one_index];
    Localization loc{L, make_ring_hom(A, L, std::move(phimap)), std::move(S), std::move(frac)};
    return loc;
}

int Localization::frac_of(int a, int s) const {
    auto it = std::lower_bound(s_elements.begin(), s_elements.end(), s);
    if (it == s_elements.end() || *it != s)
        throw Error(Errc::invalid_input, "frac_of: denominator not in S");
    return frac[a][it - s_elements.begin()];
}

CrtFactorization crt_factor(RingPtr A, const IdealSet& I, const IdealSet& J) {
    require(I.ring == A.get() && J.ring == A.get(), Errc::invalid_input,
            "crt_factor: ideals of a different ring");
    // I + J = (1)
    Bitset sum(A->order());
    for (int i : I.members)
        for (int j : J.members) sum.set(A->add(i, j));
    if (sum.count() != A->order())
        throw Error(Errc::invalid_input, "crt_factor: I + J is not the unit ideal");
    Bitset meet = I.bits().intersect(J.bits());
    if (meet.count() != 1)
        throw Error(Errc::invalid_input, "crt_factor: I and J intersect beyond zero");

    auto qi = quotient_ring(A, I);
    auto qj = quotient_ring(A, J);
    auto prod = build_product({qi.ring, qj.ring});
    std::vector<int> map(A->order());
    for (int a = 0; a < A->order(); ++a)
        map[a] = qi.projection.map[a] * qj.ring->order() + qj.projection.map[a];
    RingHom iso = make_ring_hom(A, prod, std::move(map));
    require(is_bijective(iso), Errc::internal, "crt_factor: canonical map is not bijective");
    return CrtFactorization{std::move(qi), std::move(qj), prod, std::move(iso)};
}

EqualizerSubring equalizer_subring(const RingHom& f, const RingHom& g) {
    require(f.source.get() == g.source.get() && f.target.get() == g.target.get(),
            Errc::invalid_input, "equalizer_subring: homs must share source and target");
    const FiniteRing& A = *f.source;
    std::vector<int> elems;
    for (int a = 0; a < A.order(); ++a)
        if (f.map[a] == g.map[a]) elems.push_back(a);
    std::vector<int> idx(A.order(), -1);
    for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = int(i);
    const int q = int(elems.size());
    std::vector<int> add(size_t(q) * q), mul(size_t(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            int s = idx[A.add(elems[x], elems[y])];
            int p = idx[A.mul(elems[x], elems[y])];
            require(s >= 0 && p >= 0, Errc::internal, "equalizer_subring: not closed");
            add[size_t(x) * q + y] = s;
            mul[size_t(x) * q + y] = p;
        }
    std::vector<std::string> labels;
    labels.reserve(q);
    for (int e : elems) labels.push_back(A.label(e));
    RingSpec spec;
    spec.kind = RingSpec::Kind::Table;
    spec.add_table.assign(q, std::vector<int>(q));
    spec.mul_table.assign(q, std::vector<int>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            spec.add_table[x][y] = add[size_t(x) * q + y];
            spec.mul_table[x][y] = mul[size_t(x) * q + y];
        }
    spec.zero = idx[A.zero()];
    spec.one_id = idx[A.one()];
    spec.labels = labels;
    auto E = std::make_shared<FiniteRing>(q, std::move(add), std::move(mul), idx[A.zero()],
                                          idx[A.one()], std::move(spec), std::move(labels));
    return EqualizerSubring{E, make_ring_hom(E, f.source, elems)};
}

} // namespace zdg
