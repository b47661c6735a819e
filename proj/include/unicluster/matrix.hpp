#pragma once

#include "unicluster/scalar.hpp"

#include <optional>
#include <vector>

namespace unicluster {

struct MatEchelon;

// Dense matrix over a single exact field. Zero-by-n and n-by-zero shapes are
// legal and arise constantly as arrow matrices of representations with empty
// vertex spaces.
class Mat {
  public:
    Mat() : Mat(0, 0, Field::rationals()) {}
    Mat(int rows, int cols, Field field);

    static Mat zero(int rows, int cols, Field f) { return Mat(rows, cols, f); }
    static Mat identity(int n, Field f);
    static Mat from_rows(const std::vector<std::vector<Rational>>& rows);  // over Q
    static Mat column(const std::vector<Scalar>& entries, Field f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }

    const Scalar& at(int i, int j) const;
    void set(int i, int j, const Scalar& v);

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;
    bool is_zero() const;

    Mat scaled(const Scalar& c) const;
    Mat transpose() const;
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;
    Mat sub_columns(int first, int count) const;
    Mat block_diag(const Mat& o) const;

    // Flatten to a single column, row-major. Used to turn spaces of matrices
    // into coordinate vectors for span/kernel computations.
    std::vector<Scalar> flatten() const;
    static Mat unflatten(const std::vector<Scalar>& v, int rows, int cols, Field f);

    int rank() const;
    // Columns form the reduced-echelon basis of the null space, ordered by
    // ascending free-column index; deterministic.
    Mat kernel() const;
    // A column basis of the column space, in reduced column echelon form.
    Mat column_space() const;
    // Any solution x of (*this) * x = b, or nullopt if inconsistent.
    std::optional<Mat> solve(const Mat& b) const;
    std::optional<Mat> inverse() const;
    bool is_invertible() const;

    std::string to_string() const;

  private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;

    MatEchelon rref() const;
    void check_field(const Mat& o) const;
};

struct MatEchelon {
    Mat reduced;
    std::vector<int> pivot_cols;
};

// Basis (as columns) of the span of the given columns, reduced column echelon
// form; deterministic.
Mat span_columns(const Mat& cols);

// Rows forming a basis of { x : x * m == 0 }.
Mat left_kernel(const Mat& m);

// True if the columns of v all lie in the column space of basis.
bool columns_contained_in(const Mat& v, const Mat& basis);

}  // namespace unicluster
