#include "qz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>

namespace qz {

namespace {

SmallField make_field(int p, int k)
{
    SmallField F;
    F.p = p;
    F.k = k;
    F.q = 1;
    for (int i = 0; i < k; ++i)
        F.q *= p;
    int q = F.q;
    F.add_table.assign(static_cast<std::size_t>(q) * q, 0);
    F.mul_table.assign(static_cast<std::size_t>(q) * q, 0);
    F.neg_table.assign(static_cast<std::size_t>(q), 0);
    F.inv_table.assign(static_cast<std::size_t>(q), 0);

    // element i = a + b*x with i = a + b*p; x^2 = x+1 over F_2, x^2 = -1 over F_3
    auto decoded = [&](int i) { return std::pair<int, int>{i % p, i / p}; };
    auto encode = [&](int a, int b) { return ((a % p) + p) % p + (((b % p) + p) % p) * p; };
    for (int i = 0; i < q; ++i) {
        auto [a, b] = decoded(i);
        for (int j = 0; j < q; ++j) {
            auto [c, d] = decoded(j);
            F.add_table[static_cast<std::size_t>(i) * q + j] = static_cast<uint8_t>(encode(a + c, b + d));
            // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2
            int lo = a * c, hi = a * d + b * c, sq = b * d;
            if (k == 2) {
                if (p == 2) { // x^2 = x + 1
                    lo += sq;
                    hi += sq;
                } else { // x^2 = -1
                    lo -= sq;
                }
            } else {
                lo += 0 * sq;
            }
            F.mul_table[static_cast<std::size_t>(i) * q + j] = static_cast<uint8_t>(encode(lo, hi));
        }
        F.neg_table[static_cast<std::size_t>(i)] = static_cast<uint8_t>(encode(-a, -b));
    }
    for (int i = 1; i < q; ++i)
        for (int j = 1; j < q; ++j)
            if (F.mul(i, j) == 1)
                F.inv_table[static_cast<std::size_t>(i)] = static_cast<uint8_t>(j);
    return F;
}

std::map<std::pair<int, int>, SmallField> g_fields;
std::mutex g_fields_mutex;

} // namespace

const SmallField& build_field(int p, int k)
{
    if (!((p == 2 || p == 3) && (k == 1 || k == 2)))
        throw UnsupportedField("p=" + std::to_string(p) + ", k=" + std::to_string(k));
    std::lock_guard<std::mutex> lock(g_fields_mutex);
    auto key = std::make_pair(p, k);
    auto it = g_fields.find(key);
    if (it == g_fields.end())
        it = g_fields.emplace(key, make_field(p, k)).first;
    return it->second;
}

int oracle_dim_cap(int q)
{
    switch (q) {
    case 2: return 8;
    case 3: return 5;
    case 4: return 5;
    case 9: return 4;
    default: return 0;
    }
}

// ---- linear algebra ----------------------------------------------------------

Mat rref(const SmallField& F, Mat m)
{
    std::size_t rows = m.size();
    if (rows == 0)
        return m;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        int inv = F.inv(m[r][c]);
        for (std::size_t j = 0; j < cols; ++j)
            m[r][j] = static_cast<uint8_t>(F.mul(m[r][j], inv));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            int factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = static_cast<uint8_t>(F.sub(m[i][j], F.mul(factor, m[r][j])));
        }
        ++r;
    }
    m.resize(r);
    return m;
}

int rank_of(const SmallField& F, Mat m) { return static_cast<int>(rref(F, std::move(m)).size()); }

bool in_row_space(const SmallField& F, const Mat& basis, const Row& v)
{
    Row w = v;
    for (const Row& row : basis) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv] == 0)
            ++piv;
        if (piv == row.size())
            continue;
        if (w[piv] != 0) {
            int factor = w[piv]; // row[piv] == 1 in RREF
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] = static_cast<uint8_t>(F.sub(w[j], F.mul(factor, row[j])));
        }
    }
    for (uint8_t x : w)
        if (x != 0)
            return false;
    return true;
}

Row apply(const SmallField& F, const Mat& op, const Row& v)
{
    std::size_t n = v.size();
    Row out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            acc = F.add(acc, F.mul(op[i][j], v[j]));
        out[i] = static_cast<uint8_t>(acc);
    }
    return out;
}

Mat mat_mul(const SmallField& F, const Mat& a, const Mat& b)
{
    std::size_t n = a.size();
    Mat out(n, Row(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] = static_cast<uint8_t>(F.add(out[i][j], F.mul(a[i][k], b[k][j])));
        }
    return out;
}

Mat subspace_sum(const SmallField& F, const Mat& a, const Mat& b)
{
    Mat all = a;
    all.insert(all.end(), b.begin(), b.end());
    return rref(F, std::move(all));
}

Mat subspace_intersection(const SmallField& F, const Mat& a, const Mat& b, int dim)
{
    // Zassenhaus: rref of [A|A; B|0], rows with zero left half span the
    // intersection in the right half.
    Mat big;
    for (const Row& r : a) {
        Row v(static_cast<std::size_t>(2 * dim), 0);
        for (int j = 0; j < dim; ++j)
            v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(dim + j)] = r[static_cast<std::size_t>(j)];
        big.push_back(std::move(v));
    }
    for (const Row& r : b) {
        Row v(static_cast<std::size_t>(2 * dim), 0);
        for (int j = 0; j < dim; ++j)
            v[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)];
        big.push_back(std::move(v));
    }
    big = rref(F, std::move(big));
    Mat inter;
    for (const Row& r : big) {
        bool left_zero = true;
        for (int j = 0; j < dim && left_zero; ++j)
            left_zero = r[static_cast<std::size_t>(j)] == 0;
        if (!left_zero)
            continue;
        Row v(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j)
            v[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(dim + j)];
        inter.push_back(std::move(v));
    }
    return rref(F, std::move(inter));
}

// ---- module builders ------------------------------------------------------------

FqModule module_of_type(const SmallField& F, const Partition& la)
{
    int dim = la.size();
    if (dim > oracle_dim_cap(F.q))
        throw TooLarge("module dimension " + std::to_string(dim) + " over F_" + std::to_string(F.q));
    FqModule M;
    M.F = &F;
    M.dim = dim;
    M.T.assign(static_cast<std::size_t>(dim), Row(static_cast<std::size_t>(dim), 0));
    int off = 0;
    for (int part : la.parts()) {
        // basis e_off..e_{off+part-1} ~ 1, T, ..., T^{part-1}: T shifts up
        for (int i = 1; i < part; ++i)
            M.T[static_cast<std::size_t>(off + i)][static_cast<std::size_t>(off + i - 1)] = 1;
        off += part;
    }
    return M;
}

FqModule inert_module_of_type(const SmallField& F, const Partition& la, int theta_choice)
{
    if (F.k != 1)
        throw UnsupportedField("inert modules are built over the prime base field");
    const SmallField& ext = build_field(F.p, 2);
    int dim = 2 * la.size();
    if (dim > oracle_dim_cap(F.q))
        throw TooLarge("ambient dimension " + std::to_string(dim));
    // theta = x or x + c for a second choice; both lie outside the base field
    int theta = ext.p + theta_choice % ext.p;

    FqModule M;
    M.F = &F;
    M.dim = dim;
    M.T.assign(static_cast<std::size_t>(dim), Row(static_cast<std::size_t>(dim), 0));
    M.theta = Mat(static_cast<std::size_t>(dim), Row(static_cast<std::size_t>(dim), 0));
    int off = 0;
    for (int part : la.parts()) {
        // block basis: (power i < part) x (component b in {1, x})
        auto idx = [off](int i, int b) { return off + 2 * i + b; };
        for (int i = 0; i < part; ++i)
            for (int b = 0; b < 2; ++b) {
                if (i + 1 < part)
                    M.T[static_cast<std::size_t>(idx(i + 1, b))][static_cast<std::size_t>(idx(i, b))] = 1;
                // theta * (e + f x) in the extension, decoded on the basis {1, x}
                int elem = b == 0 ? 1 : ext.p; // 1 or x
                int prod = ext.mul(theta, elem);
                int lo = prod % ext.p, hi = prod / ext.p;
                (*M.theta)[static_cast<std::size_t>(idx(i, 0))][static_cast<std::size_t>(idx(i, b))] =
                    static_cast<uint8_t>(lo);
                (*M.theta)[static_cast<std::size_t>(idx(i, 1))][static_cast<std::size_t>(idx(i, b))] =
                    static_cast<uint8_t>(hi);
            }
        off += 2 * part;
    }
    return M;
}

FqModule inert_ambient(const SmallField& F, int m, int n, int theta_choice)
{
    return inert_module_of_type(F, Partition::rectangle(m, n), theta_choice);
}

Mat inert_real_part(const FqModule& ambient, int m, int n)
{
    Mat rows;
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < m; ++i) {
            Row v(static_cast<std::size_t>(ambient.dim), 0);
            v[static_cast<std::size_t>((c * m + i) * 2)] = 1;
            rows.push_back(std::move(v));
        }
    return rref(*ambient.F, std::move(rows));
}

// ---- subspace enumeration ---------------------------------------------------------

std::vector<SubmoduleBasis> enumerate_subspaces(const SmallField& F, int dim)
{
    if (dim > oracle_dim_cap(F.q))
        throw TooLarge("subspace enumeration in dimension " + std::to_string(dim) + " over F_" +
                       std::to_string(F.q));
    std::vector<SubmoduleBasis> out;
    out.push_back(SubmoduleBasis{}); // zero subspace
    for (int k = 1; k <= dim; ++k) {
        std::vector<int> pivots(static_cast<std::size_t>(k));
        std::function<void(int, int)> choose = [&](int depth, int from) {
            if (depth == k) {
                // free positions: non-pivot columns right of each pivot
                std::vector<std::pair<int, int>> free_pos;
                for (int r = 0; r < k; ++r)
                    for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < dim; ++c)
                        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                            free_pos.emplace_back(r, c);
                Mat base(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(dim), 0));
                for (int r = 0; r < k; ++r)
                    base[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
                std::function<void(std::size_t)> fill = [&](std::size_t i) {
                    if (i == free_pos.size()) {
                        out.push_back(SubmoduleBasis{base});
                        return;
                    }
                    auto [r, c] = free_pos[i];
                    for (int v = 0; v < F.q; ++v) {
                        base[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<uint8_t>(v);
                        fill(i + 1);
                    }
                    base[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
                };
                fill(0);
                return;
            }
            for (int c = from; c < dim; ++c) {
                pivots[static_cast<std::size_t>(depth)] = c;
                choose(depth + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

bool is_t_invariant(const FqModule& M, const SubmoduleBasis& W)
{
    for (const Row& r : W.rows)
        if (!in_row_space(*M.F, W.rows, apply(*M.F, M.T, r)))
            return false;
    return true;
}

std::vector<SubmoduleBasis> enumerate_submodules(const FqModule& M, bool require_theta)
{
    std::vector<SubmoduleBasis> out;
    for (auto& W : enumerate_subspaces(*M.F, M.dim)) {
        if (!is_t_invariant(M, W))
            continue;
        if (require_theta) {
            if (!M.theta)
                throw UnsupportedField("module carries no extension action");
            bool ok = true;
            for (const Row& r : W.rows)
                if (!in_row_space(*M.F, W.rows, apply(*M.F, *M.theta, r))) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
        }
        out.push_back(std::move(W));
    }
    return out;
}

// ---- types ----------------------------------------------------------------------

namespace {

Partition type_from_dims(const std::vector<int>& dims)
{
    // dims[j] = dim of T^j-image chain, weakly decreasing to 0
    std::vector<int> conj;
    for (std::size_t j = 0; j + 1 < dims.size(); ++j) {
        int d = dims[j] - dims[j + 1];
        if (d < 0)
            throw NotTInvariant("image dimensions not decreasing");
        if (d > 0 || !conj.empty())
            conj.push_back(d);
    }
    while (!conj.empty() && conj.back() == 0)
        conj.pop_back();
    // conj is lambda' as j increases; transpose back
    Partition cp(conj);
    return cp.length() == 0 ? Partition() : cp.conjugate();
}

} // namespace

Partition module_type(const FqModule& M, const SubmoduleBasis& W)
{
    if (!is_t_invariant(M, W))
        throw NotTInvariant("subspace is not T-stable");
    std::vector<int> dims;
    Mat cur = W.rows;
    while (true) {
        dims.push_back(static_cast<int>(cur.size()));
        if (cur.empty())
            break;
        Mat next;
        for (const Row& r : cur)
            next.push_back(apply(*M.F, M.T, r));
        cur = rref(*M.F, std::move(next));
    }
    return type_from_dims(dims);
}

Partition module_type(const FqModule& M)
{
    Mat id(static_cast<std::size_t>(M.dim), Row(static_cast<std::size_t>(M.dim), 0));
    for (int i = 0; i < M.dim; ++i)
        id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return module_type(M, SubmoduleBasis{std::move(id)});
}

Partition quotient_type(const FqModule& M, const Mat& U, const Mat& W)
{
    // conj parts: dim(T^{j-1}U + W) - dim(T^j U + W)
    std::vector<int> dims;
    Mat cur = U;
    while (true) {
        dims.push_back(static_cast<int>(subspace_sum(*M.F, cur, W).size()) -
                       static_cast<int>(rref(*M.F, Mat(W)).size()));
        if (cur.empty())
            break;
        Mat next;
        for (const Row& r : cur)
            next.push_back(apply(*M.F, M.T, r));
        cur = rref(*M.F, std::move(next));
        if (dims.back() == 0)
            break;
    }
    if (dims.back() != 0)
        dims.push_back(0);
    return type_from_dims(dims);
}

Partition cotype(const FqModule& M, const SubmoduleBasis& W)
{
    Mat id(static_cast<std::size_t>(M.dim), Row(static_cast<std::size_t>(M.dim), 0));
    for (int i = 0; i < M.dim; ++i)
        id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return quotient_type(M, id, W.rows);
}

Partition type_over_extension(const FqModule& M, const Mat& W)
{
    if (!M.theta)
        throw UnsupportedField("no extension action");
    std::vector<int> dims;
    Mat cur = rref(*M.F, Mat(W));
    while (true) {
        if (cur.size() % 2 != 0)
            throw NotTInvariant("extension submodule of odd F_q-dimension");
        dims.push_back(static_cast<int>(cur.size()) / 2);
        if (cur.empty())
            break;
        Mat next;
        for (const Row& r : cur)
            next.push_back(apply(*M.F, M.T, r));
        cur = rref(*M.F, std::move(next));
    }
    return type_from_dims(dims);
}

long count_by_type(const FqModule& M, const Partition& mu)
{
    long count = 0;
    for (const auto& W : enumerate_submodules(M))
        if (module_type(M, W) == mu)
            ++count;
    return count;
}

long count_by_cotype(const FqModule& M, const Partition& mu)
{
    long count = 0;
    for (const auto& W : enumerate_submodules(M))
        if (cotype(M, W) == mu)
            ++count;
    return count;
}

long count_by_type_cotype(const FqModule& M, const Partition& mu, const Partition& nu)
{
    long count = 0;
    for (const auto& W : enumerate_submodules(M))
        if (module_type(M, W) == mu && cotype(M, W) == nu)
            ++count;
    return count;
}

long count_automorphisms(const FqModule& M)
{
    const SmallField& F = *M.F;
    long cells = static_cast<long>(M.dim) * M.dim;
    double logsize = cells * std::log2(static_cast<double>(F.q));
    if (logsize > 20.5)
        throw TooLarge("automorphism enumeration over q^" + std::to_string(cells));
    long total = 1;
    for (long i = 0; i < cells; ++i)
        total *= F.q;
    long count = 0;
    Mat A(static_cast<std::size_t>(M.dim), Row(static_cast<std::size_t>(M.dim), 0));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j) {
                A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<uint8_t>(c % F.q);
                c /= F.q;
            }
        if (mat_mul(F, A, M.T) != mat_mul(F, M.T, A))
            continue;
        if (M.theta && mat_mul(F, A, *M.theta) != mat_mul(F, *M.theta, A))
            continue;
        if (rank_of(F, A) != M.dim)
            continue;
        ++count;
    }
    return count;
}

// ---- totally real / spanning -------------------------------------------------------

namespace {

Mat theta_image(const FqModule& M, const Mat& W)
{
    Mat out;
    for (const Row& r : W)
        out.push_back(apply(*M.F, *M.theta, r));
    return rref(*M.F, std::move(out));
}

} // namespace

bool is_totally_real(const FqModule& M, const SubmoduleBasis& W)
{
    if (!M.theta)
        throw UnsupportedField("no extension action");
    Mat sum = subspace_sum(*M.F, W.rows, theta_image(M, W.rows));
    return static_cast<int>(sum.size()) == 2 * W.dim();
}

bool is_ctr(const FqModule& M, const SubmoduleBasis& W)
{
    if (!M.theta)
        throw UnsupportedField("no extension action");
    Mat sum = subspace_sum(*M.F, W.rows, theta_image(M, W.rows));
    return static_cast<int>(sum.size()) == M.dim;
}

long count_tr_grassmannian(const FqModule& ambient, const Partition& la)
{
    long count = 0;
    for (const auto& W : enumerate_submodules(ambient))
        if (is_totally_real(ambient, W) && module_type(ambient, W) == la)
            ++count;
    return count;
}

long count_ctr_grassmannian(const FqModule& ambient, const Partition& cotype_la)
{
    long count = 0;
    for (const auto& W : enumerate_submodules(ambient))
        if (is_ctr(ambient, W) && cotype(ambient, W) == cotype_la)
            ++count;
    return count;
}

namespace {

bool subspace_contains(const SmallField& F, const SubmoduleBasis& big, const SubmoduleBasis& small)
{
    for (const Row& r : small.rows)
        if (!in_row_space(F, big.rows, r))
            return false;
    return true;
}

} // namespace

std::map<SubmoduleBasis, long> tr_flag_fibers(const FqModule& ambient, const Partition& la,
                                              const Partition& mu, FlagSide side)
{
    std::vector<SubmoduleBasis> gr_la, gr_mu;
    for (const auto& W : enumerate_submodules(ambient)) {
        if (!is_totally_real(ambient, W))
            continue;
        Partition ty = module_type(ambient, W);
        if (ty == la)
            gr_la.push_back(W);
        if (ty == mu)
            gr_mu.push_back(W);
    }
    std::map<SubmoduleBasis, long> fibers;
    for (const auto& W1 : gr_mu)
        fibers[W1] = 0;
    std::map<SubmoduleBasis, long> fibers2;
    for (const auto& W2 : gr_la)
        fibers2[W2] = 0;
    for (const auto& W1 : gr_mu)
        for (const auto& W2 : gr_la)
            if (subspace_contains(*ambient.F, W2, W1)) {
                ++fibers[W1];
                ++fibers2[W2];
            }
    return side == FlagSide::Pr1 ? fibers : fibers2;
}

std::map<SubmoduleBasis, long> ctr_flag_fibers(const FqModule& ambient, const Partition& la,
                                               const Partition& mu, FlagSide side)
{
    std::vector<SubmoduleBasis> gr_la, gr_mu; // by cotype
    for (const auto& W : enumerate_submodules(ambient)) {
        if (!is_ctr(ambient, W))
            continue;
        Partition ct = cotype(ambient, W);
        if (ct == la)
            gr_la.push_back(W);
        if (ct == mu)
            gr_mu.push_back(W);
    }
    std::map<SubmoduleBasis, long> pr1, pr2;
    for (const auto& W1 : gr_mu)
        pr1[W1] = 0;
    for (const auto& W2 : gr_la)
        pr2[W2] = 0;
    for (const auto& W1 : gr_mu)
        for (const auto& W2 : gr_la)
            if (subspace_contains(*ambient.F, W1, W2)) { // W2 <= W1
                ++pr1[W1];
                ++pr2[W2];
            }
    return side == FlagSide::Pr1 ? pr1 : pr2;
}

BoundaryCheck boundary_invariants_check(const FqModule& ambient, int m, int n,
                                        const SubmoduleBasis& Wb)
{
    BoundaryCheck out;
    const SmallField& F = *ambient.F;
    Mat real = inert_real_part(ambient, m, n);
    Mat ext = subspace_sum(F, Wb.rows, theta_image(ambient, Wb.rows)); // A~ W_b
    Partition la = quotient_type(ambient, real, Wb.rows);              // cotype of W_b in A^n
    Partition target = complement_in_rectangle(la, m, n);

    Mat inter = subspace_intersection(F, ext, real, ambient.dim);
    out.part_a = rref(F, Mat(Wb.rows)) == inter;
    out.part_b = quotient_type(ambient, ext, Wb.rows) == target;
    Partition ext_type = type_over_extension(ambient, ext);
    out.part_c = ext_type == target &&
                 ext_type.length() == n - la.conj_part(m);
    return out;
}

long extension_orbit_count(const FqModule& ambient, const Partition& type)
{
    const SmallField& F = *ambient.F;
    std::vector<SubmoduleBasis> subs;
    for (const auto& W : enumerate_submodules(ambient, /*require_theta=*/true))
        if (type_over_extension(ambient, W.rows) == type)
            subs.push_back(W);
    if (subs.empty())
        return 0;

    // collect the extension-linear automorphisms
    long cells = static_cast<long>(ambient.dim) * ambient.dim;
    double logsize = cells * std::log2(static_cast<double>(F.q));
    if (logsize > 20.5)
        throw TooLarge("automorphism enumeration");
    long total = 1;
    for (long i = 0; i < cells; ++i)
        total *= F.q;
    std::vector<Mat> autos;
    Mat A(static_cast<std::size_t>(ambient.dim), Row(static_cast<std::size_t>(ambient.dim), 0));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < ambient.dim; ++i)
            for (int j = 0; j < ambient.dim; ++j) {
                A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<uint8_t>(c % F.q);
                c /= F.q;
            }
        if (mat_mul(F, A, ambient.T) != mat_mul(F, ambient.T, A))
            continue;
        if (ambient.theta && mat_mul(F, A, *ambient.theta) != mat_mul(F, *ambient.theta, A))
            continue;
        if (rank_of(F, A) != ambient.dim)
            continue;
        autos.push_back(A);
    }

    std::map<SubmoduleBasis, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i)
        index[subs[i]] = i;
    std::vector<bool> seen(subs.size(), false);
    long orbits = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (seen[i])
            continue;
        ++orbits;
        for (const Mat& g : autos) {
            Mat img;
            for (const Row& r : subs[i].rows)
                img.push_back(apply(F, g, r));
            SubmoduleBasis gw{rref(F, std::move(img))};
            auto it = index.find(gw);
            if (it != index.end())
                seen[it->second] = true;
        }
    }
    return orbits;
}

} // namespace qz
