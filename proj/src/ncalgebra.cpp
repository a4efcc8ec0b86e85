#include "qpd/ncalgebra.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <stdexcept>

namespace qpd {

namespace {

constexpr int kT = 0, kX = 1, kY = 2, kZ = 3;

/// Memoized right-multiplication of a PBW monomial by a single generator,
/// keyed per preset. Products of the same submonomials recur constantly in
/// the identity suites (powers of the casimir element in particular), so this
/// cache is load-bearing for performance.
class ProductCache {
public:
    static ProductCache& for_preset(const Preset* p) {
        static std::mutex mu;
        static std::map<const Preset*, ProductCache*> caches;
        std::lock_guard<std::mutex> lock(mu);
        auto it = caches.find(p);
        if (it == caches.end()) it = caches.emplace(p, new ProductCache()).first;
        return *it->second;
    }

    /// Normal form of m * g_g; m must be a flat monomial (rho = 0, and for the
    /// compact presets t-exponent 0 -- central letters are handled upstream).
    const NCPoly& insert_gen(const Preset& p, const Monomial& m, int g) {
        std::lock_guard<std::mutex> lock(mu_);
        return insert_gen_locked(p, m, g);
    }

private:
    const NCPoly& insert_gen_locked(const Preset& p, const Monomial& m, int g) {
        auto key = std::make_pair(m, g);
        auto hit = map_.find(key);
        if (hit != map_.end()) return hit->second;
        int top = -1;
        for (int q = p.num_gens() - 1; q >= 0; --q)
            if (m.exps[static_cast<std::size_t>(q)] > 0) {
                top = q;
                break;
            }
        NCPoly result(p);
        if (top <= g) {
            Monomial appended = m;
            appended.exps[static_cast<std::size_t>(g)]++;
            result = NCPoly::monomial(p, std::move(appended), HbarScalar::one());
        } else {
            // m = m' * g_top with top > g:  m * g = (m' * g) * g_top + m' * [g_top, g]
            Monomial head = m;
            head.exps[static_cast<std::size_t>(top)]--;
            NCPoly swapped = insert_gen_locked(p, head, g); // strictly smaller degree
            for (const auto& [sm, sc] : swapped.terms()) {
                const NCPoly& lifted = insert_gen_locked(p, sm, top);
                result = result + lifted.scaled(sc);
            }
            for (const auto& [h, c] : p.bracket(top, g)) {
                const NCPoly& contracted = insert_gen_locked(p, head, h);
                result = result + contracted.scaled(c);
            }
        }
        return map_.emplace(std::move(key), std::move(result)).first->second;
    }

    std::mutex mu_;
    std::map<std::pair<Monomial, int>, NCPoly> map_;
};

} // namespace

Preset Preset::make_gl(int n) {
    Preset p;
    p.kind_ = PresetKind::GlN;
    p.n_ = n;
    p.num_gens_ = n * n;
    p.has_rho_ = false;
    p.classical_ = false;
    const HbarScalar h = HbarScalar::h();
    auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    p.brackets_.assign(static_cast<std::size_t>(n * n),
                       std::vector<std::vector<std::pair<int, HbarScalar>>>(static_cast<std::size_t>(n * n)));
    // [l_a^b, l_c^d] = h(delta_c^b l_a^d - delta_a^d l_c^b)
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    std::vector<std::pair<int, HbarScalar>> terms;
                    if (c == b) terms.emplace_back(idx(a, d), h);
                    if (a == d) {
                        int g = idx(c, b);
                        bool merged = false;
                        for (auto& t : terms)
                            if (t.first == g) {
                                t.second = t.second - h;
                                merged = true;
                            }
                        if (!merged) terms.emplace_back(g, -h);
                    }
                    terms.erase(std::remove_if(terms.begin(), terms.end(),
                                               [](const auto& t) { return t.second.is_zero(); }),
                                terms.end());
                    p.brackets_[static_cast<std::size_t>(idx(a, b))][static_cast<std::size_t>(idx(c, d))] =
                        std::move(terms);
                }
    return p;
}

Preset Preset::make_u2(bool with_rho, bool classical) {
    Preset p;
    p.kind_ = with_rho ? PresetKind::U2Ext : PresetKind::U2;
    p.n_ = 2;
    p.num_gens_ = 4;
    p.has_rho_ = with_rho;
    p.classical_ = classical;
    p.brackets_.assign(4, std::vector<std::vector<std::pair<int, HbarScalar>>>(4));
    if (!classical) {
        const HbarScalar h = HbarScalar::h();
        auto set = [&p](int a, int b, int g, const HbarScalar& c) {
            p.brackets_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = {{g, c}};
            p.brackets_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = {{g, -c}};
        };
        set(kX, kY, kZ, h);  // [x,y] = h z
        set(kY, kZ, kX, h);  // [y,z] = h x
        set(kZ, kX, kY, h);  // [z,x] = h y
    }
    return p;
}

const Preset& Preset::gl(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("GL(N) preset supports 2 <= N <= 6");
    static std::mutex mu;
    static std::map<int, Preset> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
    return it->second;
}

const Preset& Preset::u2() {
    static const Preset p = make_u2(false, false);
    return p;
}

const Preset& Preset::u2ext() {
    static const Preset p = make_u2(true, false);
    return p;
}

const Preset& Preset::u2ext_classical() {
    static const Preset p = make_u2(true, true);
    return p;
}

std::string Preset::gen_name(int g) const {
    if (kind_ == PresetKind::GlN) {
        int i = g / n_ + 1, j = g % n_ + 1;
        return "l[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    static const char* names[4] = {"t", "x", "y", "z"};
    return names[g];
}

int Preset::gl_index(int i, int j) const {
    if (kind_ != PresetKind::GlN) throw std::logic_error("gl_index on non-GL preset");
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("l[i,j] index out of range");
    return (i - 1) * n_ + (j - 1);
}

NCPoly NCPoly::scalar(const Preset& p, const HbarScalar& c) {
    NCPoly r(p);
    if (!c.is_zero()) r.terms_.emplace(Monomial{std::vector<int>(static_cast<std::size_t>(p.num_gens()), 0), 0}, c);
    return r;
}

NCPoly NCPoly::generator(const Preset& p, int g) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(p.num_gens()), 0), 0};
    m.exps[static_cast<std::size_t>(g)] = 1;
    return monomial(p, std::move(m), HbarScalar::one());
}

NCPoly NCPoly::rho_power(const Preset& p, int k) {
    if (!p.has_rho()) throw std::invalid_argument("rho is only available in the extended preset");
    Monomial m{std::vector<int>(static_cast<std::size_t>(p.num_gens()), 0), k};
    return monomial(p, std::move(m), HbarScalar::one());
}

NCPoly NCPoly::monomial(const Preset& p, Monomial m, const HbarScalar& c) {
    NCPoly r(p);
    if (!c.is_zero()) {
        r.terms_.emplace(std::move(m), c);
        r.canonicalize();
    }
    return r;
}

bool NCPoly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_one();
}

HbarScalar NCPoly::scalar_value() const {
    if (terms_.empty()) return HbarScalar::zero();
    if (!is_scalar()) throw std::logic_error("non-scalar NCPoly has no scalar value");
    return terms_.begin()->second;
}

int NCPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void NCPoly::add_term(const Monomial& m, const HbarScalar& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    assert(preset_ == o.preset_);
    NCPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    r.canonicalize();
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

NCPoly NCPoly::scaled(const HbarScalar& c) const {
    NCPoly r(*preset_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

namespace {

std::vector<int> monomial_letters(const Monomial& m) {
    std::vector<int> w;
    for (std::size_t g = 0; g < m.exps.size(); ++g)
        for (int e = 0; e < m.exps[g]; ++e) w.push_back(static_cast<int>(g));
    return w;
}

using WordKey = std::pair<std::vector<int>, int>;

} // namespace

NCPoly NCPoly::from_words(const Preset& p, const std::vector<std::pair<HbarScalar, Word>>& ws,
                          RewriteOrder order) {
    std::map<WordKey, HbarScalar> pending;
    for (const auto& [c, w] : ws) {
        if (c.is_zero()) continue;
        if (w.rho != 0 && !p.has_rho()) throw std::invalid_argument("rho in a preset without rho");
        auto& slot = pending[{w.letters, w.rho}];
        slot = slot + c;
    }
    NCPoly result(p);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<int>& w = node.key().first;
        const int rho = node.key().second;
        const HbarScalar c = node.mapped();
        if (c.is_zero()) continue;
        // Find an inversion: adjacent pair with strictly decreasing generator ids.
        int pos = -1;
        const int len = static_cast<int>(w.size());
        if (order == RewriteOrder::Leftmost) {
            for (int q = 0; q + 1 < len; ++q)
                if (w[q] > w[q + 1]) {
                    pos = q;
                    break;
                }
        } else {
            for (int q = len - 2; q >= 0; --q)
                if (w[q] > w[q + 1]) {
                    pos = q;
                    break;
                }
        }
        if (pos < 0) {
            Monomial m{std::vector<int>(static_cast<std::size_t>(p.num_gens()), 0), rho};
            for (int g : w) m.exps[static_cast<std::size_t>(g)]++;
            result.add_term(m, c);
            continue;
        }
        // g_a g_b -> g_b g_a + [g_a, g_b]
        std::vector<int> swapped = w;
        std::swap(swapped[static_cast<std::size_t>(pos)], swapped[static_cast<std::size_t>(pos) + 1]);
        {
            auto& slot = pending[{std::move(swapped), rho}];
            slot = slot + c;
        }
        for (const auto& [g, k] : p.bracket(w[static_cast<std::size_t>(pos)], w[static_cast<std::size_t>(pos) + 1])) {
            std::vector<int> contracted;
            contracted.reserve(w.size() - 1);
            contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
            contracted.push_back(g);
            contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
            auto& slot = pending[{std::move(contracted), rho}];
            slot = slot + c * k;
        }
    }
    result.canonicalize();
    return result;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    assert(preset_ == o.preset_);
    const Preset& p = *preset_;
    NCPoly result(p);
    if (p.classical()) {
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (std::size_t g = 0; g < m.exps.size(); ++g) m.exps[g] += mb.exps[g];
                m.rho += mb.rho;
                result.add_term(m, ca * cb);
            }
        result.canonicalize();
        return result;
    }
    // t (compact presets) and rho are central; strip them so the cache only
    // sees the genuinely noncommuting part.
    const bool compact = p.kind() != PresetKind::GlN;
    ProductCache& cache = ProductCache::for_preset(preset_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            int rho_total = ma.rho + mb.rho;
            int t_total = 0;
            Monomial ka = ma, kb = mb;
            ka.rho = 0;
            kb.rho = 0;
            if (compact) {
                t_total = ka.exps[kT] + kb.exps[kT];
                ka.exps[kT] = 0;
                kb.exps[kT] = 0;
            }
            NCPoly sub = NCPoly::monomial(p, ka, HbarScalar::one());
            for (int g : monomial_letters(kb)) {
                NCPoly next(p);
                for (const auto& [sm, sc] : sub.terms())
                    next = next + cache.insert_gen(p, sm, g).scaled(sc);
                sub = std::move(next);
            }
            const HbarScalar coef = ca * cb;
            for (const auto& [sm, sc] : sub.terms()) {
                Monomial m = sm;
                m.rho += rho_total;
                if (compact) m.exps[kT] += t_total;
                result.add_term(m, sc * coef);
            }
        }
    result.canonicalize();
    return result;
}

NCPoly NCPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("NCPoly::pow needs k >= 0");
    NCPoly acc = one(*preset_);
    for (int q = 0; q < k; ++q) acc = acc * (*this);
    return acc;
}

bool NCPoly::operator==(const NCPoly& o) const {
    return preset_ == o.preset_ && terms_ == o.terms_;
}

NCPoly NCPoly::casimir(const Preset& p) {
    NCPoly c = generator(p, kX).pow(2) + generator(p, kY).pow(2) + generator(p, kZ).pow(2);
    if (!p.classical()) c = c + scalar(p, HbarScalar::hbar().pow(2));
    return c;
}

std::optional<NCPoly> NCPoly::divide_by_casimir(const NCPoly& v) {
    const Preset& p = v.preset();
    const NCPoly cas = casimir(p);
    // Leading term under graded order with x > y > z > t; the casimir leads
    // with x^2, so quotient terms are read off the x-exponent.
    auto div_less = [](const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        if (a.exps[kX] != b.exps[kX]) return a.exps[kX] < b.exps[kX];
        if (a.exps[kY] != b.exps[kY]) return a.exps[kY] < b.exps[kY];
        if (a.exps[kZ] != b.exps[kZ]) return a.exps[kZ] < b.exps[kZ];
        return a.exps[kT] < b.exps[kT];
    };
    NCPoly rem = v;
    NCPoly quot(p);
    while (!rem.is_zero()) {
        auto lead = rem.terms_.begin();
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
            if (div_less(lead->first, it->first)) lead = it;
        if (lead->first.rho != 0) return std::nullopt;
        if (lead->first.exps[kX] < 2) return std::nullopt;
        Monomial q = lead->first;
        q.exps[kX] -= 2;
        NCPoly qt = monomial(p, std::move(q), lead->second);
        quot = quot + qt;
        rem = rem - qt * cas;
    }
    return quot;
}

void NCPoly::canonicalize() {
    if (!preset_->has_rho()) return;
    // rho^2 -> casimir until all exponents are <= 1.
    bool any_high = false, any_neg = false;
    for (const auto& [m, c] : terms_) {
        if (m.rho >= 2) any_high = true;
        if (m.rho < 0) any_neg = true;
    }
    if (any_high) {
        const NCPoly cas = casimir(*preset_);
        for (;;) {
            std::vector<std::pair<Monomial, HbarScalar>> high;
            for (const auto& [m, c] : terms_)
                if (m.rho >= 2) high.emplace_back(m, c);
            if (high.empty()) break;
            for (const auto& [m, c] : high) {
                terms_.erase(m);
                Monomial lowered = m;
                lowered.rho -= 2;
                NCPoly prod = NCPoly::monomial(*preset_, std::move(lowered), c) * cas;
                for (const auto& [pm, pc] : prod.terms_) add_term(pm, pc);
            }
        }
        any_neg = false;
        for (const auto& [m, c] : terms_)
            if (m.rho < 0) any_neg = true;
    }
    if (!any_neg) return;

    // Negative levels: put each parity class over a common casimir power and
    // divide the numerator down; this identifies casimir * rho^-2 with 1 and
    // makes representatives unique.
    const NCPoly cas = casimir(*preset_);
    int min_even = 0, min_odd = 1;
    for (const auto& [m, c] : terms_) {
        if ((m.rho & 1) == 0)
            min_even = std::min(min_even, m.rho);
        else
            min_odd = std::min(min_odd, m.rho);
    }
    auto rebuild_class = [&](bool odd, int min_level, int top_level) {
        if (min_level >= top_level - 1) return; // no negative levels in this class
        std::vector<std::pair<Monomial, HbarScalar>> cls;
        for (const auto& [m, c] : terms_)
            if (((m.rho & 1) != 0) == odd) cls.emplace_back(m, c);
        for (const auto& [m, c] : cls) terms_.erase(m);
        int k = (top_level - min_level) / 2;
        NCPoly num(*preset_);
        std::vector<NCPoly> cas_pow{NCPoly::one(*preset_)};
        for (int q = 1; q <= k; ++q) cas_pow.push_back(cas_pow.back() * cas);
        for (const auto& [m, c] : cls) {
            Monomial flat = m;
            flat.rho = 0;
            int lift = (m.rho - min_level) / 2;
            num = num + NCPoly::monomial(*preset_, std::move(flat), c) * cas_pow[static_cast<std::size_t>(lift)];
        }
        while (k > 0) {
            auto q = divide_by_casimir(num);
            if (!q) break;
            num = *q;
            --k;
        }
        int level = top_level - 2 * k;
        for (const auto& [m, c] : num.terms_) {
            Monomial placed = m;
            placed.rho = level;
            add_term(placed, c);
        }
    };
    rebuild_class(false, min_even, 0);
    rebuild_class(true, min_odd, 1);
}

NCPoly NCPoly::classical_limit() const {
    const Preset* target = nullptr;
    if (preset_ == &Preset::u2() || preset_ == &Preset::u2ext() || preset_ == &Preset::u2ext_classical())
        target = &Preset::u2ext_classical();
    else
        throw std::logic_error("classical_limit is defined for the compact presets");
    NCPoly r(*target);
    for (const auto& [m, c] : terms_) {
        GaussRational v = c.substitute_hbar(GaussRational(0)); // may throw pole_error
        if (!v.is_zero()) r.add_term(m, HbarScalar(v));
    }
    r.canonicalize();
    return r;
}

NCPoly NCPoly::substituted(const Preset& target, const std::vector<NCPoly>& images) const {
    if (static_cast<int>(images.size()) != preset_->num_gens())
        throw std::invalid_argument("one image per generator required");
    NCPoly r(target);
    for (const auto& [m, c] : terms_) {
        NCPoly prod = NCPoly::scalar(target, c);
        for (int g : monomial_letters(m)) prod = prod * images[static_cast<std::size_t>(g)];
        if (m.rho != 0) prod = prod * NCPoly::rho_power(target, m.rho);
        r = r + prod;
    }
    return r;
}

namespace {

std::vector<NCPoly> gl2_images_in(const Preset& target) {
    const HbarScalar i = HbarScalar::i();
    NCPoly t = NCPoly::generator(target, kT);
    NCPoly x = NCPoly::generator(target, kX);
    NCPoly y = NCPoly::generator(target, kY);
    NCPoly z = NCPoly::generator(target, kZ);
    // a = t - iz, b = -ix - y, c = -ix + y, d = t + iz
    return {t - z.scaled(i), x.scaled(-i) - y, x.scaled(-i) + y, t + z.scaled(i)};
}

} // namespace

NCPoly gl2_to_u2(const NCPoly& a) {
    if (a.preset().kind() != PresetKind::GlN || a.preset().n() != 2)
        throw std::invalid_argument("gl2_to_u2 expects a GL(2) element");
    return a.substituted(Preset::u2(), gl2_images_in(Preset::u2()));
}

NCPoly u2_to_gl2(const NCPoly& a) {
    const Preset& gl = Preset::gl(2);
    const HbarScalar half = HbarScalar::rational(1, 2);
    const HbarScalar ihalf = HbarScalar::i() * half;
    NCPoly ga = NCPoly::generator(gl, gl.gl_index(1, 1));
    NCPoly gb = NCPoly::generator(gl, gl.gl_index(1, 2));
    NCPoly gc = NCPoly::generator(gl, gl.gl_index(2, 1));
    NCPoly gd = NCPoly::generator(gl, gl.gl_index(2, 2));
    // t = (a+d)/2, x = i(b+c)/2, y = (c-b)/2, z = i(a-d)/2
    std::vector<NCPoly> images = {(ga + gd).scaled(half), (gb + gc).scaled(ihalf),
                                  (gc - gb).scaled(half), (ga - gd).scaled(ihalf)};
    return a.substituted(gl, images);
}

NCPoly u2_to_u2ext(const NCPoly& a) {
    const Preset& ext = Preset::u2ext();
    std::vector<NCPoly> images;
    for (int g = 0; g < 4; ++g) images.push_back(NCPoly::generator(ext, g));
    return a.substituted(ext, images);
}

} // namespace qpd
