#include "qpd/qdouble.hpp"

#include <algorithm>
#include <sstream>

#include "qpd/random.hpp"

namespace qpd {

namespace {

const HbarScalar kH = HbarScalar::h();
const HbarScalar kHinv = HbarScalar::h().inverse();

void add_to(MixedPoly& m, MixedWord w, const HbarScalar& c) {
    if (c.is_zero()) return;
    auto& slot = m[std::move(w)];
    slot = slot + c;
    // zero entries are tolerated here; sigma skips them
}

void add_to(DoubleElement& m, SplitTerm t, const HbarScalar& c) {
    if (c.is_zero()) return;
    auto it = m.find(t);
    if (it == m.end()) {
        m.emplace(std::move(t), c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
}

std::string describe(const SplitTerm& t) {
    std::ostringstream os;
    for (auto [i, j] : t.bword) os << "l[" << i << "," << j << "]";
    for (auto [i, j] : t.amono) os << "d[" << i << "," << j << "]";
    return os.str();
}

std::string first_term(const DoubleElement& d) {
    if (d.empty()) return "";
    return describe(d.begin()->first);
}

} // namespace

QuantumDouble::QuantumDouble(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("quantum double needs N >= 2");
}

const Preset& QuantumDouble::gl() const { return Preset::gl(n_); }

DoubleElement QuantumDouble::sigma(const MixedPoly& e, bool shifted, RewriteOrder order) const {
    MixedPoly pending = e;
    DoubleElement out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const MixedWord& w = node.key();
        const HbarScalar c = node.mapped();
        if (c.is_zero()) continue;
        int pos = -1;
        const int len = static_cast<int>(w.size());
        if (order == RewriteOrder::Leftmost) {
            for (int q = 0; q + 1 < len; ++q)
                if (w[q].is_a && !w[q + 1].is_a) {
                    pos = q;
                    break;
                }
        } else {
            for (int q = len - 2; q >= 0; --q)
                if (w[q].is_a && !w[q + 1].is_a) {
                    pos = q;
                    break;
                }
        }
        if (pos < 0) {
            SplitTerm t;
            for (const auto& l : w)
                if (l.is_a)
                    t.amono.emplace_back(l.i, l.j);
                else
                    t.bword.emplace_back(l.i, l.j);
            std::sort(t.amono.begin(), t.amono.end());
            add_to(out, std::move(t), c);
            continue;
        }
        const MixedLetter a = w[static_cast<std::size_t>(pos)];     // d_i^j
        const MixedLetter b = w[static_cast<std::size_t>(pos) + 1]; // l_k^s
        // d_i^j l_k^s = l_k^s d_i^j [+ delta_i^s delta_k^j] + h delta_k^j d_i^s
        // (the bracketed unit term is absent for the shifted generators)
        MixedWord swapped = w;
        std::swap(swapped[static_cast<std::size_t>(pos)], swapped[static_cast<std::size_t>(pos) + 1]);
        add_to(pending, std::move(swapped), c);
        if (!shifted && a.i == b.j && b.i == a.j) {
            MixedWord unit = w;
            unit.erase(unit.begin() + pos, unit.begin() + pos + 2);
            add_to(pending, std::move(unit), c);
        }
        if (b.i == a.j) {
            MixedWord contracted = w;
            contracted.erase(contracted.begin() + pos + 1);
            contracted[static_cast<std::size_t>(pos)] = MixedLetter{true, a.i, b.j};
            add_to(pending, std::move(contracted), c * kH);
        }
    }
    return out;
}

NCPoly QuantumDouble::collapse_counit(const DoubleElement& d) const {
    std::vector<std::pair<HbarScalar, Word>> words;
    for (const auto& [t, c] : d) {
        if (!t.amono.empty()) continue;
        Word w;
        for (auto [i, j] : t.bword) w.letters.push_back(gl().gl_index(i, j));
        words.emplace_back(c, std::move(w));
    }
    return NCPoly::from_words(gl(), words);
}

MixedWord QuantumDouble::mixed_from(const AMono& a, const std::vector<int>& bletters) const {
    MixedWord w;
    for (auto [i, j] : a) w.push_back(MixedLetter{true, i, j});
    for (int g : bletters) w.push_back(MixedLetter{false, g / n_ + 1, g % n_ + 1});
    return w;
}

NCPoly QuantumDouble::act(const AMono& a, const NCPoly& b) const {
    MixedPoly e;
    for (const auto& [m, c] : b.terms()) {
        std::vector<int> letters;
        for (std::size_t g = 0; g < m.exps.size(); ++g)
            for (int q = 0; q < m.exps[static_cast<std::size_t>(g)]; ++q)
                letters.push_back(static_cast<int>(g));
        add_to(e, mixed_from(a, letters), c);
    }
    return collapse_counit(sigma(e));
}

NCPoly QuantumDouble::act_shifted(int i, int j, const NCPoly& b) const {
    NCPoly r = act({{i, j}}, b);
    if (i == j) r = r + b.scaled(kHinv);
    return r;
}

QuantumDouble::Tensor2 QuantumDouble::coproduct_gen(int i, int j) const {
    Tensor2 t;
    t[{AMono{{i, j}}, AMono{}}] = HbarScalar::one();
    t[{AMono{}, AMono{{i, j}}}] = HbarScalar::one();
    for (int k = 1; k <= n_; ++k) {
        auto& slot = t[{AMono{{k, j}}, AMono{{i, k}}}];
        slot = slot + kH;
    }
    return t;
}

QuantumDouble::Tensor2 QuantumDouble::coproduct_word(const AMono& w) const {
    Tensor2 acc;
    acc[{AMono{}, AMono{}}] = HbarScalar::one();
    for (auto [i, j] : w) {
        Tensor2 gen = coproduct_gen(i, j);
        Tensor2 next;
        for (const auto& [pa, ca] : acc)
            for (const auto& [pg, cg] : gen) {
                AMono left = pa.first, right = pa.second;
                left.insert(left.end(), pg.first.begin(), pg.first.end());
                right.insert(right.end(), pg.second.begin(), pg.second.end());
                std::sort(left.begin(), left.end());
                std::sort(right.begin(), right.end());
                auto& slot = next[{std::move(left), std::move(right)}];
                slot = slot + ca * cg;
            }
        acc = std::move(next);
    }
    return acc;
}

NCPoly QuantumDouble::coproduct_act(const AMono& w, const NCPoly& b1, const NCPoly& b2) const {
    NCPoly r(gl());
    for (const auto& [pair, c] : coproduct_word(w)) {
        NCPoly left = act(pair.first, b1);
        if (left.is_zero()) continue;
        NCPoly right = act(pair.second, b2);
        r = r + (left * right).scaled(c);
    }
    return r;
}

CheckList QuantumDouble::check_compatibility() const {
    CheckResult res{"sigma-compatibility-N" + std::to_string(n_), true, "", "", 0};
    for (int i = 1; i <= n_ && res.pass; ++i)
        for (int j = 1; j <= n_ && res.pass; ++j)
            for (int k = 1; k <= n_ && res.pass; ++k)
                for (int s = 1; s <= n_ && res.pass; ++s)
                    for (int p = 1; p <= n_ && res.pass; ++p)
                        for (int q = 1; q <= n_ && res.pass; ++q) {
                            // rel = l_k^s l_p^q - l_p^q l_k^s - h(l_k^q d_p^s - l_p^s d_k^q)
                            MixedPoly lhs;
                            auto A = MixedLetter{true, i, j};
                            auto B1 = MixedLetter{false, k, s};
                            auto B2 = MixedLetter{false, p, q};
                            add_to(lhs, {A, B1, B2}, HbarScalar::one());
                            add_to(lhs, {A, B2, B1}, -HbarScalar::one());
                            if (p == s) add_to(lhs, {A, MixedLetter{false, k, q}}, -kH);
                            if (k == q) add_to(lhs, {A, MixedLetter{false, p, s}}, kH);
                            DoubleElement left = sigma(lhs);

                            DoubleElement right;
                            AMono am{{i, j}};
                            add_to(right, {{{k, s}, {p, q}}, am}, HbarScalar::one());
                            add_to(right, {{{p, q}, {k, s}}, am}, -HbarScalar::one());
                            if (p == s) add_to(right, {{{k, q}}, am}, -kH);
                            if (k == q) add_to(right, {{{p, s}}, am}, kH);
                            if (left != right) {
                                res.pass = false;
                                std::ostringstream os;
                                os << "d[" << i << "," << j << "] rel(" << k << s << "," << p << q << ")";
                                res.residual = os.str();
                            }
                        }
    return {res};
}

CheckList QuantumDouble::check_coassociativity() const {
    CheckResult res{"coassociativity-N" + std::to_string(n_), true, "", "", 0};
    for (int i = 1; i <= n_ && res.pass; ++i)
        for (int j = 1; j <= n_ && res.pass; ++j) {
            Tensor2 d = coproduct_gen(i, j);
            Tensor3 left, right;
            for (const auto& [pair, c] : d) {
                for (const auto& [pp, cc] : coproduct_word(pair.first)) {
                    auto& slot = left[{pp.first, pp.second, pair.second}];
                    slot = slot + c * cc;
                }
                for (const auto& [pp, cc] : coproduct_word(pair.second)) {
                    auto& slot = right[{pair.first, pp.first, pp.second}];
                    slot = slot + c * cc;
                }
            }
            auto prune = [](Tensor3& t) {
                for (auto it = t.begin(); it != t.end();)
                    it = it->second.is_zero() ? t.erase(it) : std::next(it);
            };
            prune(left);
            prune(right);
            if (left != right) {
                res.pass = false;
                res.residual = "d[" + std::to_string(i) + "," + std::to_string(j) + "]";
            }
        }
    return {res};
}

CheckList QuantumDouble::elements_ideal_check() const {
    CheckResult res{"ideal-elements-killed-N" + std::to_string(n_), true, "", "", 0};
    const Preset& g = gl();
    for (int k = 1; k <= n_ && res.pass; ++k)
        for (int s = 1; s <= n_ && res.pass; ++s)
            for (int p = 1; p <= n_ && res.pass; ++p)
                for (int q = 1; q <= n_ && res.pass; ++q)
                    for (int i = 1; i <= n_ && res.pass; ++i)
                        for (int j = 1; j <= n_ && res.pass; ++j) {
                            AMono w{{i, j}};
                            NCPoly lks = NCPoly::generator(g, g.gl_index(k, s));
                            NCPoly lpq = NCPoly::generator(g, g.gl_index(p, q));
                            NCPoly r = coproduct_act(w, lks, lpq) - coproduct_act(w, lpq, lks);
                            if (p == s) r = r - act(w, NCPoly::generator(g, g.gl_index(k, q))).scaled(kH);
                            if (k == q) r = r + act(w, NCPoly::generator(g, g.gl_index(p, s))).scaled(kH);
                            if (!r.is_zero()) {
                                res.pass = false;
                                res.residual = "d[" + std::to_string(i) + "," + std::to_string(j) + "] on rel(" +
                                               std::to_string(k) + std::to_string(s) + "," + std::to_string(p) +
                                               std::to_string(q) + ")";
                            }
                        }
    return {res};
}

CheckList QuantumDouble::second_order_action_check() const {
    CheckResult res{"second-order-action-N" + std::to_string(n_), true, "", "", 0};
    const Preset& g = gl();
    for (int i = 1; i <= n_ && res.pass; ++i)
        for (int j = 1; j <= n_ && res.pass; ++j)
            for (int k = 1; k <= n_ && res.pass; ++k)
                for (int s = 1; s <= n_ && res.pass; ++s)
                    for (int p = 1; p <= n_ && res.pass; ++p)
                        for (int q = 1; q <= n_ && res.pass; ++q) {
                            NCPoly prod = NCPoly::generator(g, g.gl_index(k, s)) *
                                          NCPoly::generator(g, g.gl_index(p, q));
                            NCPoly got = act({{i, j}}, prod);
                            NCPoly want(g);
                            if (i == s && k == j) want = want + NCPoly::generator(g, g.gl_index(p, q));
                            if (i == q && p == j) want = want + NCPoly::generator(g, g.gl_index(k, s));
                            if (i == q && k == j && p == s) want = want + NCPoly::scalar(g, kH);
                            if (got != want) {
                                res.pass = false;
                                res.residual = "entry (" + std::to_string(i) + std::to_string(j) + ";" +
                                               std::to_string(k) + std::to_string(s) + ";" + std::to_string(p) +
                                               std::to_string(q) + ")";
                            }
                        }
    return {res};
}

CheckList QuantumDouble::transpose_variant_check() const {
    CheckResult res{"transpose-variant-N" + std::to_string(n_), true, "", "", 0};
    auto rel23 = [&](int i, int j, int k, int s, const HbarScalar& h) {
        MixedPoly m;
        add_to(m, {MixedLetter{true, i, j}, MixedLetter{false, k, s}}, HbarScalar::one());
        add_to(m, {MixedLetter{false, k, s}, MixedLetter{true, i, j}}, -HbarScalar::one());
        if (i == s && k == j) add_to(m, {}, -HbarScalar::one());
        if (k == j) add_to(m, {MixedLetter{true, i, s}}, -h);
        return m;
    };
    auto rel25 = [&](int i, int j, int k, int s) {
        // D1 L2 = L2 D1 + P12 - h P12 D1, entry-wise
        MixedPoly m;
        add_to(m, {MixedLetter{true, i, j}, MixedLetter{false, k, s}}, HbarScalar::one());
        add_to(m, {MixedLetter{false, k, s}, MixedLetter{true, i, j}}, -HbarScalar::one());
        if (i == s && k == j) add_to(m, {}, -HbarScalar::one());
        if (i == s) add_to(m, {MixedLetter{true, k, j}}, kH);
        return m;
    };
    auto transpose = [](const MixedPoly& m) {
        MixedPoly t;
        for (const auto& [w, c] : m) {
            MixedWord tw = w;
            for (auto& l : tw) std::swap(l.i, l.j);
            add_to(t, std::move(tw), c);
        }
        return t;
    };
    auto prune = [](MixedPoly m) {
        for (auto it = m.begin(); it != m.end();)
            it = it->second.is_zero() ? m.erase(it) : std::next(it);
        return m;
    };
    for (int a = 1; a <= n_ && res.pass; ++a)
        for (int b = 1; b <= n_ && res.pass; ++b)
            for (int c = 1; c <= n_ && res.pass; ++c)
                for (int d = 1; d <= n_ && res.pass; ++d) {
                    MixedPoly lhs = prune(transpose(rel23(a, b, c, d, -kH)));
                    MixedPoly rhs = prune(rel25(b, a, d, c));
                    if (lhs != rhs) {
                        res.pass = false;
                        res.residual = "generator pair (" + std::to_string(a) + std::to_string(b) + "),(" +
                                       std::to_string(c) + std::to_string(d) + ")";
                    }
                }
    return {res};
}

namespace {

/// Expand a shifted A-multiset into the unshifted basis:
/// dhat_i^j = d_i^j + delta_i^j / h.
std::map<AMono, HbarScalar> unshift_amono(const AMono& hat) {
    std::map<AMono, HbarScalar> acc{{AMono{}, HbarScalar::one()}};
    for (auto [i, j] : hat) {
        std::map<AMono, HbarScalar> next;
        for (const auto& [m, c] : acc) {
            AMono with = m;
            with.emplace_back(i, j);
            std::sort(with.begin(), with.end());
            auto& s1 = next[std::move(with)];
            s1 = s1 + c;
            if (i == j) {
                auto& s2 = next[m];
                s2 = s2 + c * kHinv;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

CheckList QuantumDouble::shifted_permute_check(int samples, std::uint64_t seed) const {
    CheckResult res{"shifted-permute-N" + std::to_string(n_), true, "", "", 0};
    RandomSource rnd(seed);

    // Fixed table cases first: dhat_i^i l_i^i and dhat_i^i l_k^k (k != i).
    std::vector<MixedWord> cases;
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k)
            cases.push_back({MixedLetter{true, i, i}, MixedLetter{false, k, k}});
    for (int c = 0; c < samples; ++c) {
        MixedWord w;
        int len = rnd.uniform(1, 4);
        for (int q = 0; q < len; ++q)
            w.push_back(MixedLetter{rnd.uniform(0, 1) == 0, rnd.uniform(1, n_), rnd.uniform(1, n_)});
        cases.push_back(std::move(w));
    }
    for (const auto& w : cases) {
        if (!res.pass) break;
        // Route 1: shifted rewrite, then expand the result to the unshifted basis.
        DoubleElement shifted = sigma({{w, HbarScalar::one()}}, /*shifted=*/true);
        DoubleElement route1;
        for (const auto& [t, c] : shifted)
            for (const auto& [m, k] : unshift_amono(t.amono)) add_to(route1, {t.bword, m}, c * k);
        // Route 2: expand the input word first, then unshifted rewrite.
        MixedPoly expanded;
        {
            MixedPoly acc{{MixedWord{}, HbarScalar::one()}};
            for (const auto& l : w) {
                MixedPoly next;
                for (const auto& [pw, pc] : acc) {
                    MixedWord with = pw;
                    with.push_back(l);
                    add_to(next, std::move(with), pc);
                    if (l.is_a && l.i == l.j) add_to(next, pw, pc * kHinv);
                }
                acc = std::move(next);
            }
            expanded = std::move(acc);
        }
        DoubleElement route2 = sigma(expanded, /*shifted=*/false);
        if (route1 != route2) {
            res.pass = false;
            res.residual = "word length " + std::to_string(w.size()) + ", first diff near " + first_term(route1);
        }
    }
    return {res};
}

CheckList QuantumDouble::grouplike_check(int samples, std::uint64_t seed) const {
    CheckList out;
    // Part A: Delta(DD_i^j) = sum_k DD_i^k (x) DD_k^j with DD = h Dhat^t.
    CheckResult ga{"grouplike-coproduct-N" + std::to_string(n_), true, "", "", 0};
    for (int i = 1; i <= n_ && ga.pass; ++i)
        for (int j = 1; j <= n_ && ga.pass; ++j) {
            Tensor2 lhs;
            for (const auto& [pair, c] : coproduct_gen(j, i)) {
                auto& slot = lhs[pair];
                slot = slot + c * kH;
            }
            {
                auto& unit = lhs[{AMono{}, AMono{}}];
                if (i == j) unit = unit + HbarScalar::one();
            }
            Tensor2 rhs;
            for (int k = 1; k <= n_; ++k) {
                // h dhat_k^i (x) h dhat_j^k expanded in the unshifted basis
                std::map<AMono, HbarScalar> left = unshift_amono({{k, i}});
                std::map<AMono, HbarScalar> right = unshift_amono({{j, k}});
                for (const auto& [lm, lc] : left)
                    for (const auto& [rm, rc] : right) {
                        auto& slot = rhs[{lm, rm}];
                        slot = slot + lc * rc * kH * kH;
                    }
            }
            auto prune = [](Tensor2& t) {
                for (auto it = t.begin(); it != t.end();)
                    it = it->second.is_zero() ? t.erase(it) : std::next(it);
            };
            prune(lhs);
            prune(rhs);
            if (lhs != rhs) {
                ga.pass = false;
                ga.residual = "DD[" + std::to_string(i) + "," + std::to_string(j) + "]";
            }
        }
    out.push_back(ga);

    // Part B: Leibniz in group-like form, dhat_j^i(ab) = h sum_k dhat_k^i(a) dhat_j^k(b).
    CheckResult gb{"grouplike-leibniz-N" + std::to_string(n_), true, "", "", 0};
    RandomSource rnd(seed);
    const Preset& g = gl();
    std::vector<std::pair<NCPoly, NCPoly>> pairs;
    pairs.emplace_back(NCPoly::generator(g, g.gl_index(1, 1)), NCPoly::generator(g, g.gl_index(2, 2)));
    pairs.emplace_back(NCPoly::one(g), rnd.poly(g, 3, 3));
    for (int c = 0; c < samples; ++c) pairs.emplace_back(rnd.poly(g, 3, 3), rnd.poly(g, 3, 3));
    for (const auto& [a, b] : pairs) {
        if (!gb.pass) break;
        NCPoly ab = a * b;
        for (int i = 1; i <= n_ && gb.pass; ++i)
            for (int j = 1; j <= n_ && gb.pass; ++j) {
                NCPoly lhs = act_shifted(j, i, ab);
                NCPoly rhs(g);
                for (int k = 1; k <= n_; ++k) rhs = rhs + act_shifted(k, i, a) * act_shifted(j, k, b);
                rhs = rhs.scaled(kH);
                if (lhs != rhs) {
                    gb.pass = false;
                    gb.residual = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
    }
    out.push_back(gb);
    return out;
}

CheckList QuantumDouble::act_well_defined_check(int samples, std::uint64_t seed) const {
    // Every defining relation of the algebra, sandwiched between random words
    // u, v of degree <= 1, killed by every random A-word of length <= 2.
    CheckResult res{"act-well-defined-N" + std::to_string(n_), true, "", "", 0};
    RandomSource rnd(seed);
    const Preset& g = gl();
    auto random_bword = [&](int maxlen) {
        std::vector<int> w;
        int len = rnd.uniform(0, maxlen);
        for (int q = 0; q < len; ++q) w.push_back(rnd.uniform(0, g.num_gens() - 1));
        return w;
    };
    for (int k = 1; k <= n_ && res.pass; ++k)
        for (int s = 1; s <= n_ && res.pass; ++s)
            for (int p = 1; p <= n_ && res.pass; ++p)
                for (int q = 1; q <= n_ && res.pass; ++q)
                    for (int c = 0; c < samples && res.pass; ++c) {
                        std::vector<int> u = random_bword(1), v = random_bword(1);
                        AMono w;
                        int alen = rnd.uniform(1, 2);
                        for (int a = 0; a < alen; ++a) w.emplace_back(rnd.uniform(1, n_), rnd.uniform(1, n_));
                        std::sort(w.begin(), w.end());
                        auto make_word = [&](std::initializer_list<int> mid) {
                            std::vector<int> full = u;
                            full.insert(full.end(), mid.begin(), mid.end());
                            full.insert(full.end(), v.begin(), v.end());
                            return full;
                        };
                        int lks = g.gl_index(k, s), lpq = g.gl_index(p, q);
                        std::vector<std::pair<HbarScalar, std::vector<int>>> formal;
                        // rel = l_k^s l_p^q - l_p^q l_k^s - h(l_k^q delta_p^s - l_p^s delta_k^q)
                        formal.emplace_back(HbarScalar::one(), make_word({lks, lpq}));
                        formal.emplace_back(-HbarScalar::one(), make_word({lpq, lks}));
                        if (p == s) formal.emplace_back(-kH, make_word({g.gl_index(k, q)}));
                        if (k == q) formal.emplace_back(kH, make_word({g.gl_index(p, s)}));
                        MixedPoly mixed;
                        for (const auto& [coef, bw] : formal) {
                            MixedWord mw;
                            for (auto [i, j] : w) mw.push_back(MixedLetter{true, i, j});
                            for (int gident : bw)
                                mw.push_back(MixedLetter{false, gident / n_ + 1, gident % n_ + 1});
                            add_to(mixed, std::move(mw), coef);
                        }
                        NCPoly r = collapse_counit(sigma(mixed));
                        if (!r.is_zero()) {
                            res.pass = false;
                            res.residual = "rel(" + std::to_string(k) + std::to_string(s) + "," +
                                           std::to_string(p) + std::to_string(q) + ")";
                        }
                    }
    return {res};
}

CheckList QuantumDouble::sigma_confluence_check(int samples, std::uint64_t seed) const {
    CheckResult res{"sigma-order-independence-N" + std::to_string(n_), true, "", "", 0};
    RandomSource rnd(seed);
    for (int c = 0; c < samples && res.pass; ++c) {
        MixedWord w;
        int len = rnd.uniform(0, 5);
        for (int q = 0; q < len; ++q)
            w.push_back(MixedLetter{rnd.uniform(0, 1) == 0, rnd.uniform(1, n_), rnd.uniform(1, n_)});
        MixedPoly e{{w, HbarScalar::one()}};
        if (sigma(e, false, RewriteOrder::Leftmost) != sigma(e, false, RewriteOrder::Rightmost)) {
            res.pass = false;
            res.residual = "sample " + std::to_string(c);
        }
    }
    return {res};
}

CheckList QuantumDouble::a_commutativity_check() const {
    CheckResult res{"a-commutativity-survives-sigma-N" + std::to_string(n_), true, "", "", 0};
    for (int i = 1; i <= n_ && res.pass; ++i)
        for (int j = 1; j <= n_ && res.pass; ++j)
            for (int k = 1; k <= n_ && res.pass; ++k)
                for (int s = 1; s <= n_ && res.pass; ++s)
                    for (int p = 1; p <= n_ && res.pass; ++p)
                        for (int q = 1; q <= n_ && res.pass; ++q) {
                            MixedPoly e;
                            MixedLetter a1{true, i, j}, a2{true, k, s}, b{false, p, q};
                            add_to(e, {a1, a2, b}, HbarScalar::one());
                            add_to(e, {a2, a1, b}, -HbarScalar::one());
                            if (!sigma(e).empty()) {
                                res.pass = false;
                                res.residual = "d[" + std::to_string(i) + std::to_string(j) + "]d[" +
                                               std::to_string(k) + std::to_string(s) + "] l[" + std::to_string(p) +
                                               std::to_string(q) + "]";
                            }
                        }
    return {res};
}

} // namespace qpd
