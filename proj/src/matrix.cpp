#include "unicluster/matrix.hpp"

#include <sstream>

namespace unicluster {

Mat::Mat(int rows, int cols, Field field) : rows_(rows), cols_(cols), field_(field) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    e_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(field));
}

Mat Mat::identity(int n, Field f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(r, c, Field::rationals());
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("Mat::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
    }
    return m;
}

Mat Mat::column(const std::vector<Scalar>& entries, Field f) {
    Mat m(static_cast<int>(entries.size()), 1, f);
    for (size_t i = 0; i < entries.size(); ++i) m.set(static_cast<int>(i), 0, entries[i]);
    return m;
}

const Scalar& Mat::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat::at");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

void Mat::set(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat::set");
    if (!(v.field() == field_)) throw std::invalid_argument("Mat::set: mixed fields");
    e_[static_cast<size_t>(i) * cols_ + j] = v;
}

void Mat::check_field(const Mat& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("Mat: mixed fields");
}

Mat Mat::operator+(const Mat& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                r.e_[static_cast<size_t>(i) * o.cols_ + j] =
                    r.e_[static_cast<size_t>(i) * o.cols_ + j] + a * o.at(k, j);
            }
        }
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (!(e_[k] == o.e_[k])) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r(rows_, cols_, field_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    check_field(o);
    if (rows_ != o.rows_) throw std::invalid_argument("Mat::hstack: row mismatch");
    Mat r(rows_, cols_ + o.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    check_field(o);
    if (cols_ != o.cols_) throw std::invalid_argument("Mat::vstack: column mismatch");
    Mat r(rows_ + o.rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
    return r;
}

Mat Mat::sub_columns(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_) throw std::out_of_range("Mat::sub_columns");
    Mat r(rows_, count, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) r.set(i, j, at(i, first + j));
    return r;
}

Mat Mat::block_diag(const Mat& o) const {
    check_field(o);
    Mat r(rows_ + o.rows_, cols_ + o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.set(rows_ + i, cols_ + j, o.at(i, j));
    return r;
}

std::vector<Scalar> Mat::flatten() const { return e_; }

Mat Mat::unflatten(const std::vector<Scalar>& v, int rows, int cols, Field f) {
    if (static_cast<int>(v.size()) != rows * cols) throw std::invalid_argument("Mat::unflatten: size mismatch");
    Mat m(rows, cols, f);
    m.e_ = v;
    return m;
}

// Row reduction with exact arithmetic: pick the first nonzero entry in each
// column as pivot, normalize to 1, eliminate above and below.
MatEchelon Mat::rref() const {
    Mat a = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int i = row; i < rows_; ++i)
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) {
                Scalar tmp = a.at(row, j);
                a.set(row, j, a.at(p, j));
                a.set(p, j, tmp);
            }
        Scalar inv = a.at(row, col).inverse();
        for (int j = 0; j < cols_; ++j) a.set(row, j, a.at(row, j) * inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Scalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < cols_; ++j) a.set(i, j, a.at(i, j) - f * a.at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return MatEchelon{std::move(a), std::move(pivots)};
}

int Mat::rank() const { return static_cast<int>(rref().pivot_cols.size()); }

Mat Mat::kernel() const {
    MatEchelon ech = rref();
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int j = 0; j < cols_; ++j) {
            if (pi < ech.pivot_cols.size() && ech.pivot_cols[pi] == j)
                ++pi;
            else
                free_cols.push_back(j);
        }
    }
    Mat k(cols_, static_cast<int>(free_cols.size()), field_);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        k.set(f, static_cast<int>(fi), Scalar::one(field_));
        for (size_t r = 0; r < ech.pivot_cols.size(); ++r)
            k.set(ech.pivot_cols[r], static_cast<int>(fi), -ech.reduced.at(static_cast<int>(r), f));
    }
    return k;
}

Mat Mat::column_space() const {
    MatEchelon ech = transpose().rref();
    int r = static_cast<int>(ech.pivot_cols.size());
    Mat basis(rows_, r, field_);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rows_; ++j) basis.set(j, i, ech.reduced.at(i, j));
    return basis;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
    check_field(b);
    if (b.rows() != rows_) throw std::invalid_argument("Mat::solve: shape mismatch");
    Mat aug = hstack(b);
    MatEchelon ech = aug.rref();
    // A pivot in the augmented block means some RHS column is inconsistent.
    for (int c : ech.pivot_cols)
        if (c >= cols_) return std::nullopt;
    Mat x(cols_, b.cols(), field_);
    for (size_t r = 0; r < ech.pivot_cols.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.set(ech.pivot_cols[r], j, ech.reduced.at(static_cast<int>(r), cols_ + j));
    return x;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return solve(identity(rows_, field_));
}

bool Mat::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

std::string Mat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).to_string();
        }
        os << "\n";
    }
    return os.str();
}

Mat span_columns(const Mat& cols) { return cols.column_space(); }

Mat left_kernel(const Mat& m) { return m.transpose().kernel().transpose(); }

bool columns_contained_in(const Mat& v, const Mat& basis) {
    if (v.cols() == 0) return true;
    return basis.hstack(v).rank() == basis.rank();
}

}  // namespace unicluster
