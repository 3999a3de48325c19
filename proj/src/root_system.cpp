#include "affq/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "affq/affine.hpp"
#include "affq/weyl.hpp"

namespace affq {

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("Cartan type: expected <series><rank>, e.g. A3");
    CartanType t;
    t.series = static_cast<char>(std::toupper(s[0]));
    try {
        t.rank = std::stoi(s.substr(1));
    } catch (...) {
        throw std::invalid_argument("Cartan type: bad rank in '" + s + "'");
    }
    if (t.rank <= 0) throw std::invalid_argument("Cartan type: rank must be positive");
    switch (t.series) {
        case 'A':
            break;
        case 'B':
        case 'C':
            if (t.rank < 2) throw std::invalid_argument("Cartan type: B/C requires rank >= 2");
            break;
        case 'D':
            if (t.rank < 3) throw std::invalid_argument("Cartan type: D requires rank >= 3");
            break;
        case 'E':
            if (t.rank < 6 || t.rank > 8) throw std::invalid_argument("Cartan type: E requires rank 6..8");
            break;
        case 'F':
            if (t.rank != 4) throw std::invalid_argument("Cartan type: F requires rank 4");
            break;
        case 'G':
            if (t.rank != 2) throw std::invalid_argument("Cartan type: G requires rank 2");
            break;
        default:
            throw std::invalid_argument("Cartan type: unknown series '" + std::string(1, t.series) + "'");
    }
    return t;
}

bool Root::is_positive() const {
    bool nonzero = false;
    for (long long c : coeffs) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

bool AffineRoot::is_real() const {
    for (long long c : finite)
        if (c != 0) return true;
    return false;
}

bool AffineRoot::is_positive() const {
    if (level > 0) return true;
    if (level < 0) return false;
    return Root{finite}.is_positive();
}

AffineRoot AffineRoot::operator-() const {
    AffineRoot r = *this;
    for (auto& c : r.finite) c = -c;
    r.level = -r.level;
    return r;
}

bool Coweight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

Coweight Coweight::operator+(const Coweight& o) const {
    Coweight r = *this;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Coweight Coweight::operator-(const Coweight& o) const {
    Coweight r = *this;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Coweight Coweight::operator-() const {
    Coweight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

bool Coweight::is_antidominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c <= 0; });
}

bool Coweight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

namespace {

IntMat cartan_matrix_for(const CartanType& t) {
    int r = t.rank;
    IntMat a(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, long long aij, long long aji) {
        // 1-based nodes; a[i][j] = <alpha_j, alpha_i^vee>
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    switch (t.series) {
        case 'A':
            for (int i = 1; i < r; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':  // Bourbaki: alpha_r short
            for (int i = 1; i < r - 1; ++i) link(i, i + 1, -1, -1);
            link(r - 1, r, -1, -2);
            break;
        case 'C':  // Bourbaki: alpha_r long
            for (int i = 1; i < r - 1; ++i) link(i, i + 1, -1, -1);
            link(r - 1, r, -2, -1);
            break;
        case 'D':
            for (int i = 1; i < r - 2; ++i) link(i, i + 1, -1, -1);
            link(r - 2, r, -1, -1);
            if (r >= 3) link(r - 2, r - 1, -1, -1);
            break;
        case 'G':  // Bourbaki: alpha_1 short
            link(1, 2, -3, -1);
            break;
        case 'E': {
            // Bourbaki numbering: node 2 attaches to node 4
            for (int i : {1, 3}) link(i, i + 2, -1, -1);
            for (int i = 4; i < r; ++i) link(i, i + 1, -1, -1);
            link(2, 4, -1, -1);
            break;
        }
        case 'F':
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
            break;
        default:
            throw std::invalid_argument("unsupported series");
    }
    return a;
}

void validate_cartan(const IntMat& a) {
    size_t r = a.size();
    if (r == 0) throw std::invalid_argument("Cartan matrix: empty");
    for (size_t i = 0; i < r; ++i) {
        if (a[i].size() != r) throw std::invalid_argument("Cartan matrix: not square");
        if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix: diagonal must be 2");
        for (size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw std::invalid_argument("Cartan matrix: positive off-diagonal");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("Cartan matrix: zero pattern not symmetric");
        }
    }
}

// symmetrizer d with d_i a_ij = d_j a_ji, positive integers
std::vector<long long> compute_symmetrizer(const IntMat& a) {
    size_t r = a.size();
    std::vector<Rational> d(r, Rational(0));
    // propagate along the Dynkin graph from each unvisited component
    for (size_t start = 0; start < r; ++start) {
        if (!d[start].is_zero()) continue;
        d[start] = Rational(1);
        std::vector<size_t> stack{start};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < r; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rational want = d[i] * Rational(a[i][j], a[j][i]);
                if (d[j].is_zero()) {
                    d[j] = want;
                    stack.push_back(j);
                } else if (d[j] != want) {
                    throw std::invalid_argument("Cartan matrix: not symmetrizable");
                }
            }
        }
    }
    // clear denominators
    BigInt lcm(1);
    for (auto& x : d) lcm = lcm * x.den() / BigInt::gcd(lcm, x.den());
    std::vector<long long> out(r);
    for (size_t i = 0; i < r; ++i) out[i] = (d[i] * Rational(lcm)).num().to_ll();
    return out;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(const CartanType& type) {
    return build(cartan_matrix_for(type), type.to_string());
}

std::shared_ptr<const RootSystem> RootSystem::build(const IntMat& cartan, std::string name) {
    validate_cartan(cartan);
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->rank_ = static_cast<int>(cartan.size());
    rs->name_ = std::move(name);
    rs->cartan_ = cartan;
    rs->symmetrizer_ = compute_symmetrizer(cartan);
    rs->finish_construction();
    return rs;
}

void RootSystem::finish_construction() {
    int r = rank_;
    // reflection closure from the simple roots
    std::set<IntVec> seen;
    std::vector<IntVec> queue;
    for (int i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    size_t guard = 0;
    while (!queue.empty()) {
        IntVec l = queue.back();
        queue.pop_back();
        for (int i = 0; i < r; ++i) {
            // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i
            long long pair = 0;
            for (int j = 0; j < r; ++j) pair += cartan_[i][j] * l[j];
            IntVec m = l;
            m[i] -= pair;
            if (seen.insert(m).second) queue.push_back(m);
        }
        if (++guard > 100000) throw std::invalid_argument("Cartan matrix: root closure does not terminate (not finite type)");
    }
    for (const auto& l : seen) {
        Root rt{l};
        if (rt.is_positive()) positive_roots_.push_back(rt);
    }
    std::sort(positive_roots_.begin(), positive_roots_.end(),
              [](const Root& x, const Root& y) {
                  long long hx = std::accumulate(x.coeffs.begin(), x.coeffs.end(), 0LL);
                  long long hy = std::accumulate(y.coeffs.begin(), y.coeffs.end(), 0LL);
                  if (hx != hy) return hx < hy;
                  return x.coeffs < y.coeffs;
              });

    // highest root: the dominance-maximal positive root (unique in irreducible
    // type; for reducible data this throws, which we accept as a build error)
    auto dominated = [](const Root& x, const Root& y) {
        for (size_t i = 0; i < x.coeffs.size(); ++i)
            if (x.coeffs[i] > y.coeffs[i]) return false;
        return true;
    };
    std::optional<Root> top;
    for (const auto& rt : positive_roots_) {
        bool is_top = true;
        for (const auto& other : positive_roots_) {
            if (!dominated(other, rt)) {
                is_top = false;
                break;
            }
        }
        if (is_top) {
            top = rt;
            break;
        }
    }
    if (!top) throw std::invalid_argument("Cartan matrix: no highest root (reducible type?)");
    highest_root_ = *top;

    // minuscule nodes: <pi_i^vee, alpha> in {0,1} for all positive alpha,
    // i.e. the coefficient of alpha_i in every positive root is 0 or 1
    for (int i = 1; i <= r; ++i) {
        bool ok = true;
        for (const auto& rt : positive_roots_)
            if (rt.coeffs[i - 1] < 0 || rt.coeffs[i - 1] > 1) ok = false;
        if (ok) minuscule_.insert(i);
    }

    weyl_ = std::make_unique<WeylGroup>(this);
    if (!weyl_->capped()) affine_ = std::make_unique<AffineData>(this);
}

RootSystem::~RootSystem() = default;

const WeylGroup& RootSystem::weyl() const { return *weyl_; }

const AffineData& RootSystem::affine() const {
    if (!affine_)
        throw std::runtime_error("affine data unavailable: Weyl group exceeds the enumeration cap");
    return *affine_;
}

int RootSystem::positive_root_index(const Root& r) const {
    for (size_t i = 0; i < positive_roots_.size(); ++i)
        if (positive_roots_[i] == r) return static_cast<int>(i);
    return -1;
}

Root RootSystem::simple_root(int i) const {
    IntVec v(rank_, 0);
    v[i - 1] = 1;
    return Root{v};
}

Coweight RootSystem::simple_coroot(int i) const {
    // fundamental-coweight coords of alpha_i^vee = row i of the Cartan matrix
    IntVec v(rank_);
    for (int j = 0; j < rank_; ++j) v[j] = cartan_[i - 1][j];
    return Coweight{v};
}

Coweight RootSystem::fundamental_coweight(int i) const {
    IntVec v(rank_, 0);
    v[i - 1] = 1;
    return Coweight{v};
}

Weight RootSystem::fundamental_weight(int i) const {
    IntVec v(rank_, 0);
    v[i - 1] = 1;
    return Weight{v};
}

Weight RootSystem::root_to_weight(const Root& r) const {
    // alpha_i has fundamental-weight coords = column i of the Cartan matrix
    IntVec w(rank_, 0);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) w[j] += cartan_[j][i] * r.coeffs[i];
    return Weight{w};
}

namespace {
// exact solve M x = b over the rationals (M integer, square, invertible)
std::vector<Rational> solve_int(const IntMat& M, const IntVec& b) {
    size_t n = M.size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = Rational(M[i][j]);
        aug[i][n] = Rational(b[i]);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("singular matrix");
        std::swap(aug[piv], aug[col]);
        Rational inv = aug[col][col].inverse();
        for (size_t j = col; j <= n; ++j) aug[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}
}  // namespace

std::optional<Root> RootSystem::weight_to_root(const Weight& w) const {
    auto x = solve_int(cartan_, w.coords);
    Root r;
    r.coeffs.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (!x[i].is_integer()) return std::nullopt;
        r.coeffs[i] = x[i].num().to_ll();
    }
    return r;
}

Coweight RootSystem::coroot(const Root& r) const {
    // <alpha_j, alpha^vee> = 2 (alpha_j, alpha) / (alpha, alpha)
    // with (alpha_i, alpha_j) = d_i a_ij
    auto bform = [&](const IntVec& x, const IntVec& y) {
        long long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) s += x[i] * symmetrizer_[i] * cartan_[i][j] * y[j];
        return s;
    };
    long long norm = bform(r.coeffs, r.coeffs);
    IntVec v(rank_);
    for (int j = 0; j < rank_; ++j) {
        IntVec ej(rank_, 0);
        ej[j] = 1;
        long long num = 2 * bform(ej, r.coeffs);
        if (num % norm != 0) throw std::runtime_error("coroot: non-integral pairing");
        v[j] = num / norm;
    }
    return Coweight{v};
}

long long RootSystem::pairing_root(const Root& alpha, const Coweight& mu) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += alpha.coeffs[i] * mu.coords[i];
    return s;
}

Rational RootSystem::pairing(const Weight& lambda, const Coweight& mu) const {
    // express mu over simple coroots, then <pi_j, alpha_i^vee> = delta_ij
    auto cc = coroot_coords(mu);
    Rational s(0);
    for (int i = 0; i < rank_; ++i) s += Rational(lambda.coords[i]) * cc[i];
    return s;
}

std::vector<Rational> RootSystem::coroot_coords(const Coweight& mu) const {
    // mu = sum_k x_k alpha_k^vee; fundamental-coweight coords of alpha_k^vee
    // are row k of the Cartan matrix, so coords = A^T x
    IntMat At(rank_, IntVec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) At[i][j] = cartan_[j][i];
    return solve_int(At, mu.coords);
}

bool RootSystem::in_coroot_lattice(const Coweight& mu) const {
    for (const auto& x : coroot_coords(mu))
        if (!x.is_integer()) return false;
    return true;
}

std::vector<Rational> RootSystem::root_coords(const Weight& w) const {
    return solve_int(cartan_, w.coords);
}

Coweight RootSystem::two_rho_coweight() const {
    Coweight acc{IntVec(rank_, 0)};
    for (const auto& rt : positive_roots_) acc = acc + coroot(rt);
    return acc;
}

Weight RootSystem::two_rho() const {
    Weight acc{IntVec(rank_, 0)};
    for (const auto& rt : positive_roots_) acc = acc + root_to_weight(rt);
    return acc;
}

const AffineRoot RootSystem::affine_simple_root(int i) const {
    if (i == 0) {
        AffineRoot b;
        b.finite = (-highest_root_).coeffs;
        b.level = 1;
        return b;
    }
    AffineRoot b;
    b.finite = simple_root(i).coeffs;
    b.level = 0;
    return b;
}

AffineRoot RootSystem::null_root() const {
    AffineRoot b;
    b.finite = IntVec(rank_, 0);
    b.level = 1;
    return b;
}

}  // namespace affq
