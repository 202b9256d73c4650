#include "quatdyn/jordan_form.hpp"

#include <algorithm>
#include <cmath>

namespace quatdyn {

static bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

StructuralJordan read_jordan_structure(const HMatrix& a, double tol) {
  if (!a.square()) throw NonSquare("structural Jordan read requires a square matrix");
  const int n = a.rows();
  StructuralJordan out;

  // Validate the global shape: complex diagonal with Im >= 0, 0/1
  // superdiagonal, zero elsewhere.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = a(i, j);
      if (i == j) {
        if (!near(q.y, 0.0, tol) || !near(q.z, 0.0, tol) || q.x < -tol)
          throw Error("not a Jordan form: diagonal entry (" + std::to_string(i + 1) + "," +
                      std::to_string(i + 1) + ") is not complex with Im >= 0");
      } else if (j == i + 1) {
        bool zero = norm(q) <= tol;
        bool one = near(q.w, 1.0, tol) && near(q.x, 0.0, tol) && near(q.y, 0.0, tol) &&
                   near(q.z, 0.0, tol);
        if (!zero && !one)
          throw Error("not a Jordan form: superdiagonal entry (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ") is neither 0 nor 1");
      } else if (norm(q) > tol) {
        throw Error("not a Jordan form: nonzero entry off the diagonal band at (" +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }

  int start = 0;
  while (start < n) {
    std::complex<double> rep(a(start, start).w, a(start, start).x);
    int end = start;
    while (end + 1 < n && norm(a(end, end + 1)) > tol) {
      ++end;
      std::complex<double> d(a(end, end).w, a(end, end).x);
      if (std::abs(d - rep) > tol)
        throw Error("not a Jordan form: diagonal changes inside a chained block at row " +
                    std::to_string(end + 1));
    }
    out.blocks.push_back({rep, end - start + 1});
    start = end + 1;
  }

  out.sorted_of_input.resize(out.blocks.size());
  for (size_t i = 0; i < out.blocks.size(); ++i) out.sorted_of_input[i] = int(i);
  std::stable_sort(out.sorted_of_input.begin(), out.sorted_of_input.end(), [&](int x, int y) {
    const JordanBlock &bx = out.blocks[size_t(x)], &by = out.blocks[size_t(y)];
    double mx = std::abs(bx.rep), my = std::abs(by.rep);
    if (std::abs(mx - my) > 1e-10 * (1.0 + std::max(mx, my))) return mx < my;
    if (bx.size != by.size) return bx.size < by.size;
    if (std::abs(bx.rep.imag() - by.rep.imag()) > 1e-10) return bx.rep.imag() < by.rep.imag();
    return false;
  });
  return out;
}

JordanData jordan_data_from_structure(const HMatrix& a, double tol) {
  StructuralJordan sj = read_jordan_structure(a, tol);
  const int n = a.rows();
  std::vector<int> input_offset(sj.blocks.size());
  int off = 0;
  for (size_t b = 0; b < sj.blocks.size(); ++b) {
    input_offset[b] = off;
    off += sj.blocks[b].size;
  }
  JordanData jd;
  jd.S = HMatrix(n, n);
  int sorted_off = 0;
  for (int b_in : sj.sorted_of_input) {
    const JordanBlock& blk = sj.blocks[size_t(b_in)];
    jd.blocks.push_back(blk);
    for (int r = 0; r < blk.size; ++r)
      jd.S(sorted_off + r, input_offset[size_t(b_in)] + r) = Quaternion(1.0);
    sorted_off += blk.size;
  }
  return jd;
}

}  // namespace quatdyn
