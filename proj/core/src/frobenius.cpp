#include "heiscat/frobenius.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace heiscat {

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat identity_mat(int n) {
    Mat m(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

// Gauss-Jordan inverse; returns empty on singular input.
Mat invert(Mat a) {
    int n = (int)a.size();
    Mat inv = identity_mat(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return {};
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = a[col][col].inv();
        for (int j = 0; j < n; ++j) {
            a[col][j] *= d;
            inv[col][j] *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(Mat& m) {
    std::vector<int> pivots;
    int rows = (int)m.size();
    if (rows == 0) return pivots;
    int cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Scalar d = m[r][c].inv();
        for (int j = c; j < cols; ++j) m[r][j] *= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_of(Mat m) { return (int)echelon(m).size(); }

} // namespace

AlgElem::AlgElem(const Frobenius* A, std::vector<Scalar> coords)
    : A_(A), coords_(std::move(coords)) {
    if ((int)coords_.size() != A->dim()) throw algebra_error("coordinate size mismatch");
}

AlgElem AlgElem::basis(const Frobenius& A, int i) {
    std::vector<Scalar> c(A.dim(), Scalar(0));
    c[i] = Scalar(1);
    return AlgElem(&A, std::move(c));
}

AlgElem AlgElem::unit(const Frobenius& A) { return AlgElem(&A, A.unit_coords()); }

AlgElem AlgElem::zero(const Frobenius& A) {
    return AlgElem(&A, std::vector<Scalar>(A.dim(), Scalar(0)));
}

bool AlgElem::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Parity> AlgElem::parity() const {
    std::optional<Parity> p;
    for (int i = 0; i < (int)coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        Parity q = A_->parity(i);
        if (!p)
            p = q;
        else if (*p != q)
            return std::nullopt;
    }
    if (!p) return Parity::even;
    return p;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
    std::vector<Scalar> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return AlgElem(A_, std::move(c));
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
    std::vector<Scalar> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return AlgElem(A_, std::move(c));
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
    int n = A_->dim();
    std::vector<Scalar> c(n, Scalar(0));
    for (int i = 0; i < n; ++i) {
        if (coords_[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (o.coords_[j].is_zero()) continue;
            Scalar f = coords_[i] * o.coords_[j];
            const auto& m = A_->mult(i, j);
            for (int k = 0; k < n; ++k)
                if (!m[k].is_zero()) c[k] += f * m[k];
        }
    }
    return AlgElem(A_, std::move(c));
}

AlgElem AlgElem::operator*(const Scalar& s) const {
    std::vector<Scalar> c = coords_;
    for (auto& x : c) x *= s;
    return AlgElem(A_, std::move(c));
}

bool AlgElem::operator==(const AlgElem& o) const { return (*this - o).is_zero(); }

Scalar AlgElem::trace() const { return A_->trace(coords_); }

std::string AlgElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < (int)coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (coords_[i].is_one())
            os << A_->basis_name(i);
        else
            os << "(" << coords_[i].str() << ")*" << A_->basis_name(i);
    }
    if (first) os << "0";
    return os.str();
}

Frobenius::Frobenius(Data d) : data_(std::move(d)) {
    validate();
    compute_dual_basis();
    compute_center_cocenter();
    compute_teleporters();
}

Scalar Frobenius::trace(const std::vector<Scalar>& coords) const {
    Scalar acc(0);
    for (int i = 0; i < dim(); ++i)
        if (!coords[i].is_zero()) acc += coords[i] * data_.trace[i];
    return acc;
}

bool Frobenius::purely_even() const {
    for (Parity p : data_.parity)
        if (is_odd(p)) return false;
    return true;
}

void Frobenius::validate() const {
    int n = dim();
    if (n == 0) throw algebra_error("empty basis");
    if ((int)data_.parity.size() != n || (int)data_.unit.size() != n ||
        (int)data_.trace.size() != n || (int)data_.mult.size() != n)
        throw algebra_error("inconsistent algebra data sizes");
    for (const auto& row : data_.mult) {
        if ((int)row.size() != n) throw algebra_error("inconsistent mult table");
        for (const auto& entry : row)
            if ((int)entry.size() != n) throw algebra_error("inconsistent mult table");
    }

    auto mul_coords = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        std::vector<Scalar> c(n, Scalar(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (x[i].is_zero() || y[j].is_zero()) continue;
                Scalar f = x[i] * y[j];
                for (int k = 0; k < n; ++k) c[k] += f * data_.mult[i][j][k];
            }
        return c;
    };
    auto basis_vec = [&](int i) {
        std::vector<Scalar> c(n, Scalar(0));
        c[i] = Scalar(1);
        return c;
    };

    // Unit.
    for (int j = 0; j < n; ++j) {
        if (mul_coords(data_.unit, basis_vec(j)) != basis_vec(j) ||
            mul_coords(basis_vec(j), data_.unit) != basis_vec(j))
            throw algebra_error("unit axiom fails at basis element " + data_.basis_names[j]);
    }

    // Parity of products.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Parity expect = data_.parity[i] + data_.parity[j];
            for (int k = 0; k < n; ++k)
                if (!data_.mult[i][j][k].is_zero() && data_.parity[k] != expect)
                    throw algebra_error("multiplication is not parity-homogeneous");
        }

    // Associativity on all basis triples.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto lhs = mul_coords(data_.mult[i][j], basis_vec(k));
                auto rhs = mul_coords(basis_vec(i), data_.mult[j][k]);
                if (lhs != rhs)
                    throw algebra_error("associativity fails at (" + data_.basis_names[i] +
                                        ", " + data_.basis_names[j] + ", " +
                                        data_.basis_names[k] + ")");
            }

    // Even trace.
    for (int i = 0; i < n; ++i)
        if (is_odd(data_.parity[i]) && !data_.trace[i].is_zero())
            throw algebra_error("trace map is not even: tr(" + data_.basis_names[i] +
                                ") != 0");

    // Supersymmetry of the trace form.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar tij = trace(data_.mult[i][j]);
            Scalar tji = trace(data_.mult[j][i]);
            int sign = koszul_sign(data_.parity[i], data_.parity[j]);
            if (tij != (sign < 0 ? -tji : tji))
                throw algebra_error("trace form is not supersymmetric");
        }

    // Nondegeneracy.
    Mat gram(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = trace(data_.mult[i][j]);
    if (invert(gram).empty())
        throw algebra_error("not a Frobenius form: Gram matrix is singular");
}

void Frobenius::compute_dual_basis() {
    int n = dim();
    Mat gram(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = trace(data_.mult[i][j]);
    Mat ginv = invert(gram);
    dual_basis_.reserve(n);
    for (int i = 0; i < n; ++i) dual_basis_.push_back(AlgElem(this, ginv[i]));

    // (adecomp) and double duality, as construction-time sanity checks.
    for (int i = 0; i < n; ++i) {
        AlgElem a = AlgElem::basis(*this, i);
        AlgElem lhs = AlgElem::zero(*this);
        AlgElem rhs = AlgElem::zero(*this);
        for (int b = 0; b < n; ++b) {
            lhs = lhs + AlgElem::basis(*this, b) * (dual_basis_[b] * a).trace();
            rhs = rhs + dual_basis_[b] * (a * AlgElem::basis(*this, b)).trace();
        }
        if (!(lhs == a) || !(rhs == a))
            throw algebra_error("dual basis failed the decomposition identity");
        if (dual_basis_[i].parity() != std::optional<Parity>(data_.parity[i]))
            throw algebra_error("dual basis element has wrong parity");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // tr((-1)^{|b_i|} b_i * dual_j) must be delta_ij.
            Scalar v = (AlgElem::basis(*this, i) * dual_basis_[j]).trace();
            if (is_odd(data_.parity[i])) v = -v;
            if (v != Scalar(i == j ? 1 : 0))
                throw algebra_error("double dual identity fails");
        }
}

AlgElem Frobenius::dagger(const AlgElem& a) const {
    AlgElem acc = AlgElem::zero(*this);
    for (int i = 0; i < dim(); ++i) {
        if (a.coords()[i].is_zero()) continue;
        AlgElem ai = AlgElem::basis(*this, i) * a.coords()[i];
        for (int b = 0; b < dim(); ++b) {
            AlgElem term = AlgElem::basis(*this, b) * ai * dual_basis_[b];
            if (koszul_sign(data_.parity[i], data_.parity[b]) < 0)
                term = term * Scalar(-1);
            acc = acc + term;
        }
    }
    return acc * Scalar::z();
}

void Frobenius::compute_center_cocenter() {
    int n = dim();
    // Supercommutators [b_i, b_j] = b_i b_j - (-1)^{|i||j|} b_j b_i.
    auto supercomm = [&](int i, int j) {
        AlgElem x = AlgElem::basis(*this, i) * AlgElem::basis(*this, j);
        AlgElem y = AlgElem::basis(*this, j) * AlgElem::basis(*this, i);
        if (koszul_sign(data_.parity[i], data_.parity[j]) < 0) y = y * Scalar(-1);
        return x - y;
    };

    // Z(A): null space of a |-> ([a, b_j])_j restricted to homogeneous parts.
    // Stack the linear maps for all j into one matrix acting on coordinates.
    Mat sys;
    for (int j = 0; j < n; ++j) {
        // Row block: coordinates of b_i b_j - (-1)^{|i||j|} b_j b_i as functions of i.
        for (int k = 0; k < n; ++k) {
            std::vector<Scalar> row(n, Scalar(0));
            for (int i = 0; i < n; ++i) row[i] = supercomm(i, j).coords()[k];
            sys.push_back(std::move(row));
        }
    }
    // Null space via echelon form.
    Mat m = sys;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[c] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        center_.center.push_back(AlgElem(this, std::move(v)));
    }

    // Cocenter: A modulo span of supercommutators. Echelonize the span and
    // pick the first basis elements completing it.
    Mat span;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            AlgElem c = supercomm(i, j);
            if (!c.is_zero()) span.push_back(c.coords());
        }
    Mat span_ech = span;
    std::vector<int> span_pivots = echelon(span_ech);
    span_ech.resize(span_pivots.size());

    std::vector<int> reps;
    Mat work = span_ech;
    for (int i = 0; i < n && (int)(work.size()) < n; ++i) {
        Mat trial = work;
        std::vector<Scalar> row(n, Scalar(0));
        row[i] = Scalar(1);
        trial.push_back(row);
        if (rank_of(trial) > (int)work.size()) {
            reps.push_back(i);
            work = trial;
            echelon(work);
        }
    }
    center_.cocenter_rep_indices = reps;
    for (int i : reps) center_.cocenter_reps.push_back(AlgElem::basis(*this, i));

    // Coordinates of each basis class over the representatives: solve
    // b_i = sum_r c_r rep_r (mod span) by eliminating against the span.
    int rdim = (int)reps.size();
    center_.cocenter_coords.assign(n, std::vector<Scalar>(rdim, Scalar(0)));
    // Build a matrix with columns [span | reps] and solve for each b_i.
    int scount = (int)span_ech.size();
    int cols = scount + rdim;
    for (int i = 0; i < n; ++i) {
        // Augmented system over coordinates: span_ech^T * x + reps^T * y = e_i.
        Mat aug(n, std::vector<Scalar>(cols + 1, Scalar(0)));
        for (int r = 0; r < scount; ++r)
            for (int k = 0; k < n; ++k) aug[k][r] = span_ech[r][k];
        for (int r = 0; r < rdim; ++r) aug[reps[r]][scount + r] = Scalar(1);
        aug[i][cols] = Scalar(1);
        Mat red = aug;
        std::vector<int> piv = echelon(red);
        // Read the solution.
        std::vector<Scalar> sol(cols, Scalar(0));
        for (size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] == cols) throw algebra_error("inconsistent cocenter system");
            sol[piv[r]] = red[r][cols];
        }
        for (int r = 0; r < rdim; ++r) center_.cocenter_coords[i][r] = sol[scount + r];
    }

    // Nondegeneracy of the pairing Z(A) x C(A) -> k.
    int zdim = (int)center_.center.size();
    if (zdim != rdim)
        throw algebra_error("center and cocenter dimensions disagree");
    Mat pairing(zdim, std::vector<Scalar>(rdim, Scalar(0)));
    for (int i = 0; i < zdim; ++i)
        for (int j = 0; j < rdim; ++j)
            pairing[i][j] = (center_.center[i] * center_.cocenter_reps[j]).trace();
    if (rank_of(pairing) != zdim)
        throw algebra_error("center/cocenter pairing is degenerate");
}

void Frobenius::compute_teleporters() {
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            Scalar c = dual_basis_[i].coords()[j];
            if (c.is_zero()) continue;
            teleporter_.push_back(TeleporterEntry{i, j, Scalar::z() * c, data_.parity[i]});
        }
    }
}

bool Frobenius::is_central(const AlgElem& a) const {
    for (int j = 0; j < dim(); ++j) {
        AlgElem b = AlgElem::basis(*this, j);
        AlgElem ab = a * b;
        AlgElem ba = b * a;
        // Mixed-parity a must be split; test homogeneous components.
        for (int i = 0; i < dim(); ++i) {
            if (a.coords()[i].is_zero()) continue;
            AlgElem ai = AlgElem::basis(*this, i) * a.coords()[i];
            AlgElem diff = ai * b - (koszul_sign(parity(i), parity(j)) < 0
                                         ? (b * ai) * Scalar(-1)
                                         : b * ai);
            if (!diff.is_zero()) return false;
        }
    }
    return true;
}

std::shared_ptr<const Frobenius> Frobenius::trivial() {
    Data d;
    d.name = "trivial";
    d.basis_names = {"1"};
    d.parity = {Parity::even};
    d.unit = {Scalar(1)};
    d.mult = {{{Scalar(1)}}};
    d.trace = {Scalar(1)};
    return std::make_shared<Frobenius>(std::move(d));
}

std::shared_ptr<const Frobenius> Frobenius::group_algebra_cyclic(int dcount) {
    if (dcount < 1) throw algebra_error("cyclic group order must be positive");
    Data d;
    d.name = "c" + std::to_string(dcount);
    for (int i = 0; i < dcount; ++i)
        d.basis_names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    d.parity.assign(dcount, Parity::even);
    d.unit.assign(dcount, Scalar(0));
    d.unit[0] = Scalar(1);
    d.mult.assign(dcount, std::vector<std::vector<Scalar>>(
                              dcount, std::vector<Scalar>(dcount, Scalar(0))));
    for (int i = 0; i < dcount; ++i)
        for (int j = 0; j < dcount; ++j) d.mult[i][j][(i + j) % dcount] = Scalar(1);
    d.trace.assign(dcount, Scalar(0));
    d.trace[0] = Scalar(1);
    return std::make_shared<Frobenius>(std::move(d));
}

std::shared_ptr<const Frobenius> Frobenius::truncated_polynomial(int n, bool odd_generator) {
    if (n < 2) throw algebra_error("truncation order must be at least 2");
    if (odd_generator && n != 2)
        throw algebra_error("odd generator is only meaningful for c^2 = 0");
    Data d;
    d.name = n == 2 ? "dual" : "dual" + std::to_string(n);
    for (int i = 0; i < n; ++i)
        d.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "c" : "c" + std::to_string(i)));
    d.parity.assign(n, Parity::even);
    if (odd_generator)
        for (int i = 0; i < n; ++i) d.parity[i] = (i % 2) ? Parity::odd : Parity::even;
    d.unit.assign(n, Scalar(0));
    d.unit[0] = Scalar(1);
    d.mult.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) d.mult[i][j][i + j] = Scalar(1);
    d.trace.assign(n, Scalar(0));
    d.trace[n - 1] = Scalar(1);
    return std::make_shared<Frobenius>(std::move(d));
}

std::shared_ptr<const Frobenius> Frobenius::matrix_algebra_2x2() {
    Data d;
    d.name = "mat2";
    d.basis_names = {"e11", "e12", "e21", "e22"};
    d.parity.assign(4, Parity::even);
    d.unit = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    auto idx = [](int a, int b) { return 2 * a + b; };
    d.mult.assign(4, std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4, Scalar(0))));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e)
                    if (b == c) d.mult[idx(a, b)][idx(c, e)][idx(a, e)] = Scalar(1);
    d.trace = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    return std::make_shared<Frobenius>(std::move(d));
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Scalar((int)v.get<long>());
    if (v.is_string()) return Scalar::from_string(v.get<std::string>());
    throw algebra_error("expected integer or scalar string in algebra JSON");
}

std::vector<Scalar> coords_from_json(const nlohmann::json& v, int n) {
    if (!v.is_array() || (int)v.size() != n)
        throw algebra_error("expected coordinate array of length " + std::to_string(n));
    std::vector<Scalar> out;
    out.reserve(n);
    for (const auto& x : v) out.push_back(scalar_from_json(x));
    return out;
}

} // namespace

std::shared_ptr<const Frobenius> Frobenius::from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Data d;
    d.name = j.value("name", "user");
    for (const auto& b : j.at("basis")) d.basis_names.push_back(b.get<std::string>());
    int n = (int)d.basis_names.size();
    for (const auto& p : j.at("parity")) {
        int v = p.get<int>();
        if (v != 0 && v != 1) throw algebra_error("parity entries must be 0 or 1");
        d.parity.push_back(v ? Parity::odd : Parity::even);
    }
    d.unit = coords_from_json(j.at("unit"), n);
    const auto& mult = j.at("mult");
    if ((int)mult.size() != n) throw algebra_error("mult table has wrong size");
    for (const auto& row : mult) {
        std::vector<std::vector<Scalar>> r;
        if ((int)row.size() != n) throw algebra_error("mult table has wrong size");
        for (const auto& entry : row) r.push_back(coords_from_json(entry, n));
        d.mult.push_back(std::move(r));
    }
    for (const auto& tr : j.at("trace")) d.trace.push_back(scalar_from_json(tr));
    return std::make_shared<Frobenius>(std::move(d));
}

std::shared_ptr<const Frobenius> Frobenius::named(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "c2") return group_algebra_cyclic(2);
    if (name.rfind("cyclic:", 0) == 0) return group_algebra_cyclic(std::stoi(name.substr(7)));
    if (name == "dual") return truncated_polynomial(2);
    if (name.rfind("dual:", 0) == 0) return truncated_polynomial(std::stoi(name.substr(5)));
    if (name == "mat2") return matrix_algebra_2x2();
    std::ifstream f(name);
    if (!f) throw algebra_error("unknown algebra '" + name + "' (not a builtin or readable file)");
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json(ss.str());
}

std::string Frobenius::to_json() const {
    nlohmann::json j;
    j["name"] = data_.name;
    j["basis"] = data_.basis_names;
    std::vector<int> par;
    for (Parity p : data_.parity) par.push_back(is_odd(p) ? 1 : 0);
    j["parity"] = par;
    auto coords = [&](const std::vector<Scalar>& v) {
        std::vector<std::string> out;
        for (const auto& c : v) out.push_back(c.str());
        return out;
    };
    j["unit"] = coords(data_.unit);
    nlohmann::json mult = nlohmann::json::array();
    for (const auto& row : data_.mult) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(coords(e));
        mult.push_back(r);
    }
    j["mult"] = mult;
    j["trace"] = coords(data_.trace);
    return j.dump(2);
}

} // namespace heiscat
