#include "ossa/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ossa {

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)},
              {"im", std::move(im)}};
}

Matrix matrix_from_json(const Json& j) {
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (rows < 0 || cols < 0 ||
      re.size() != static_cast<size_t>(rows * cols) ||
      im.size() != static_cast<size_t>(rows * cols)) {
    throw std::invalid_argument("matrix_from_json: inconsistent dimensions");
  }
  Matrix m(rows, cols);
  size_t k = 0;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c, ++k) {
      m(r, c) = Complex(re[k].get<double>(), im[k].get<double>());
    }
  }
  return m;
}

Json algebra_to_json(const MatrixAlgebra& a) {
  Json basis = Json::array();
  for (const Matrix& b : a.basis()) basis.push_back(matrix_to_json(b));
  return Json{{"ambient_dim", a.ambient_dim()}, {"basis", std::move(basis)}};
}

MatrixAlgebra algebra_from_json(const Json& j) {
  const Index d = j.at("ambient_dim").get<Index>();
  std::vector<Matrix> basis;
  for (const Json& b : j.at("basis")) basis.push_back(matrix_from_json(b));
  return MatrixAlgebra(d, std::move(basis));
}

Json functional_to_json(const PositiveFunctional& w) {
  return Json{{"algebra", algebra_to_json(w.algebra())},
              {"representative", matrix_to_json(w.representative())},
              {"normalized", w.normalized()}};
}

PositiveFunctional functional_from_json(const Json& j) {
  return PositiveFunctional(algebra_from_json(j.at("algebra")),
                            matrix_from_json(j.at("representative")));
}

Json gns_to_json(const GnsSpace& g) {
  Json pi = Json::array();
  for (Index k = 0; k < g.algebra().dim(); ++k) {
    pi.push_back(matrix_to_json(g.pi_basis(k)));
  }
  return Json{{"gram", matrix_to_json(g.gram())},
              {"eta", matrix_to_json(g.eta())},
              {"pi", std::move(pi)},
              {"l2_dim", g.l2_dim()},
              {"faithful", g.faithful()}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_text_file: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("write_text_file: write failed for " + path);
}

}  // namespace ossa
