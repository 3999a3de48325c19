#include "affq/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace affq {

namespace {

IntMat identity_mat(int r) {
    IntMat m(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size();
    IntMat c(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long long aik = a[i][k];
            if (aik == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
    size_t n = m.size();
    IntVec r(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem* rs) {
    WeylElement e;
    e.rs_ = rs;
    e.mat_root_ = identity_mat(rs->rank());
    e.mat_weight_ = identity_mat(rs->rank());
    e.mat_coweight_ = identity_mat(rs->rank());
    return e;
}

WeylElement WeylElement::simple(const RootSystem* rs, int i) {
    int r = rs->rank();
    if (i < 1 || i > r) throw std::invalid_argument("simple reflection index out of range");
    WeylElement s = identity(rs);
    // s_i(alpha_j) = alpha_j - a[i][j] alpha_i          (root coords)
    // s_i(pi_j)    = pi_j    - delta_ij alpha_i         (weight coords)
    // s_i(mu)      = mu      - <alpha_i, mu> alpha_i^v  (coweight coords)
    int i0 = i - 1;
    for (int j = 0; j < r; ++j) {
        s.mat_root_[i0][j] -= rs->a(i0, j);                 // row i0 picks up -a[i][j]
        s.mat_weight_[j][i0] -= rs->a(j, i0);               // column i0: pi_i -> pi_i - alpha_i
        s.mat_coweight_[j][i0] -= rs->a(i0, j);             // column i0: c_i scales alpha_i^vee
    }
    return s;
}

WeylElement WeylElement::from_word(const RootSystem* rs, const std::vector<int>& word) {
    WeylElement w = identity(rs);
    for (int i : word) w = w * simple(rs, i);
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (rs_ != o.rs_) throw std::invalid_argument("Weyl elements from different root systems");
    WeylElement r;
    r.rs_ = rs_;
    r.mat_root_ = mat_mul(mat_root_, o.mat_root_);
    r.mat_weight_ = mat_mul(mat_weight_, o.mat_weight_);
    r.mat_coweight_ = mat_mul(mat_coweight_, o.mat_coweight_);
    return r;
}

WeylElement WeylElement::inverse() const {
    // Weyl elements have finite order; invert by building from the reverse
    // reduced word (cheap at these ranks)
    auto word = reduced_word();
    std::reverse(word.begin(), word.end());
    return from_word(rs_, word);
}

bool WeylElement::is_identity() const {
    return mat_coweight_ == identity_mat(rs_->rank());
}

Root WeylElement::act(const Root& r) const { return Root{mat_apply(mat_root_, r.coeffs)}; }

Coweight WeylElement::act(const Coweight& c) const { return Coweight{mat_apply(mat_coweight_, c.coords)}; }

Weight WeylElement::act(const Weight& w) const { return Weight{mat_apply(mat_weight_, w.coords)}; }

AffineRoot WeylElement::act(const AffineRoot& b) const {
    AffineRoot r;
    r.finite = mat_apply(mat_root_, b.finite);
    r.level = b.level;
    return r;
}

int WeylElement::length() const {
    int n = 0;
    for (const auto& alpha : rs_->positive_roots())
        if (!act(alpha).is_positive()) ++n;
    return n;
}

std::vector<Root> WeylElement::inversions() const {
    std::vector<Root> out;
    for (const auto& alpha : rs_->positive_roots())
        if (!act(alpha).is_positive()) out.push_back(alpha);
    return out;
}

std::vector<int> WeylElement::reduced_word() const {
    // greedy smallest left descent yields the shortlex-minimal reduced word
    std::vector<int> word;
    WeylElement w = *this;
    int len = w.length();
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= rs_->rank(); ++i) {
            // s_i w < w  iff  w^{-1}(alpha_i) < 0  iff  alpha_i inverts under left mult;
            // test cheaply: l(s_i w) < l(w)
            WeylElement cand = simple(rs_, i) * w;
            int cl = cand.length();
            if (cl == len - 1) {
                word.push_back(i);
                w = cand;
                len = cl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("reduced_word: no descent found");
    }
    return word;
}

WeylGroup::WeylGroup(const RootSystem* rs) : rs_(rs) {
    // BFS over right multiplication by the simple generators
    std::map<IntMat, size_t> seen;
    std::vector<WeylElement> cur{WeylElement::identity(rs)};
    seen[cur[0].mat_coweight_] = 0;
    elements_.push_back(cur[0]);
    while (!cur.empty() && elements_.size() <= RootSystem::kWeylCap) {
        std::vector<WeylElement> next;
        for (const auto& w : cur) {
            for (int i = 1; i <= rs_->rank(); ++i) {
                WeylElement x = w * WeylElement::simple(rs_, i);
                if (seen.emplace(x.mat_coweight_, elements_.size()).second) {
                    elements_.push_back(x);
                    next.push_back(x);
                    if (elements_.size() > RootSystem::kWeylCap) break;
                }
            }
            if (elements_.size() > RootSystem::kWeylCap) break;
        }
        cur = std::move(next);
    }
    if (elements_.size() > RootSystem::kWeylCap) {
        capped_ = true;
        elements_.clear();
        return;
    }
    std::vector<std::pair<std::pair<int, std::vector<int>>, size_t>> keys;
    keys.reserve(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i)
        keys.push_back({{elements_[i].length(), elements_[i].reduced_word()}, i});
    std::sort(keys.begin(), keys.end());
    std::vector<WeylElement> sorted;
    sorted.reserve(elements_.size());
    for (auto& k : keys) sorted.push_back(elements_[k.second]);
    elements_ = std::move(sorted);
    longest_index_ = elements_.size() - 1;
}

const std::vector<WeylElement>& WeylGroup::elements() const {
    if (capped_)
        throw std::runtime_error("Weyl group order exceeds the enumeration cap (" +
                                 std::to_string(RootSystem::kWeylCap) + ")");
    return elements_;
}

size_t WeylGroup::order() const { return elements().size(); }

const WeylElement& WeylGroup::longest() const { return elements()[longest_index_]; }

std::vector<WeylElement> WeylGroup::min_coset_reps(const std::set<int>& I_P) const {
    std::vector<WeylElement> out;
    for (const auto& w : elements()) {
        bool ok = true;
        for (int i : I_P)
            if (!w.act(rs_->simple_root(i)).is_positive()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<WeylElement> WeylGroup::parabolic_subgroup(const std::set<int>& I_P) const {
    std::vector<WeylElement> out;
    std::map<IntMat, bool> seen;
    std::vector<WeylElement> cur{WeylElement::identity(rs_)};
    seen[cur[0].mat_coweight_] = true;
    out.push_back(cur[0]);
    while (!cur.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : cur)
            for (int i : I_P) {
                WeylElement x = w * WeylElement::simple(rs_, i);
                if (seen.emplace(x.mat_coweight_, true).second) {
                    out.push_back(x);
                    next.push_back(x);
                }
            }
        cur = std::move(next);
    }
    return out;
}

WeylElement WeylGroup::v_of_node(int i) const {
    if (!rs_->minuscule_nodes().count(i))
        throw std::invalid_argument("v_of_node: node " + std::to_string(i) + " is not minuscule");
    Coweight target = longest().act(rs_->fundamental_coweight(i));
    for (const auto& w : elements())  // sorted by length: first match is minimal
        if (w.act(rs_->fundamental_coweight(i)) == target) return w;
    throw std::logic_error("v_of_node: unreachable");
}

int WeylGroup::f_of_node(int i) const {
    Coweight img = v_of_node(i).act(rs_->fundamental_coweight(i));
    for (int j = 1; j <= rs_->rank(); ++j)
        if (img == -rs_->fundamental_coweight(j)) return j;
    throw std::logic_error("f_of_node: image is not minus a fundamental coweight");
}

std::vector<WeylElement> WeylGroup::stabilizer_cosets(const Coweight& mu) const {
    std::vector<WeylElement> reps;
    std::set<Coweight> seen;
    for (const auto& w : elements()) {  // sorted by length: first hit is minimal
        Coweight img = w.act(mu);
        if (seen.insert(img).second) reps.push_back(w);
    }
    return reps;
}

std::vector<Coweight> WeylGroup::orbit(const Coweight& mu) const {
    std::vector<Coweight> out;
    std::set<Coweight> seen;
    for (const auto& w : elements()) {
        Coweight img = w.act(mu);
        if (seen.insert(img).second) out.push_back(img);
    }
    return out;
}

WeylElement WeylGroup::reflection(const Root& alpha) const {
    // build the three matrices of s_alpha directly
    int r = rs_->rank();
    Coweight av = rs_->coroot(alpha);
    auto avx = rs_->coroot_coords(av);  // integer coords over simple coroots
    Weight aw = rs_->root_to_weight(alpha);

    WeylElement s = WeylElement::identity(rs_);
    for (int m = 0; m < r; ++m)
        for (int k = 0; k < r; ++k) {
            // roots:     beta - <beta, alpha^vee> alpha,  <alpha_k, alpha^vee> = av[k]
            s.mat_root_[m][k] -= alpha.coeffs[m] * av.coords[k];
            // weights:   lambda - <lambda, alpha^vee> alpha,  <pi_k, alpha^vee> = coroot coord k
            s.mat_weight_[m][k] -= aw.coords[m] * avx[k].num().to_ll();
            // coweights: mu - <alpha, mu> alpha^vee,  <alpha, pi_k^vee> = alpha.coeffs[k]
            s.mat_coweight_[m][k] -= av.coords[m] * alpha.coeffs[k];
        }
    return s;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
    if (u.length() > v.length()) return false;
    if (u.length() == 0) return true;
    if (u.length() == v.length()) return u == v;
    // standard recursion: pick s with sv < v
    const RootSystem* rs = u.root_system();
    for (int i = 1; i <= rs->rank(); ++i) {
        WeylElement s = WeylElement::simple(rs, i);
        WeylElement sv = s * v;
        if (sv.length() < v.length()) {
            WeylElement su = s * u;
            if (su.length() < u.length()) return bruhat_leq(su, sv);
            return bruhat_leq(u, sv);
        }
    }
    return false;  // v = e handled above
}

bool weak_left_leq(const WeylElement& u, const WeylElement& v) {
    return (v * u.inverse()).length() + u.length() == v.length();
}

}  // namespace affq
