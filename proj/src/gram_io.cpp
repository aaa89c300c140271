#include "simlat/gram_io.hpp"

#include <fstream>
#include <sstream>

namespace simlat {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

GramLattice read_gram(std::istream& in, std::string name) {
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty() || lines[0].size() != 1) throw InvalidInput("gram file: first line must hold the dimension");
  const Rational dim = parse_rational(lines[0][0]);
  if (dim.get_den() != 1 || dim <= 0 || dim > 1024) throw InvalidInput("gram file: bad dimension " + lines[0][0]);
  const std::size_t n = dim.get_num().get_ui();
  if (lines.size() != n + 1) {
    throw InvalidInput("gram file: expected " + std::to_string(n) + " matrix rows, found " +
                       std::to_string(lines.size() - 1));
  }
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lines[i + 1].size() != n) throw InvalidInput("gram file: row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = parse_rational(lines[i + 1][j]);
  }
  return GramLattice(std::move(gram), std::move(name));
}

GramLattice load_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open gram file: " + path);
  return read_gram(in, "file:" + path);
}

void write_gram(std::ostream& out, const RatMatrix& gram) {
  out << gram.rows() << '\n';
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) out << (j ? " " : "") << to_string(gram(i, j));
    out << '\n';
  }
}

void save_gram_file(const std::string& path, const RatMatrix& gram) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write gram file: " + path);
  write_gram(out, gram);
}

void write_matrix(std::ostream& out, const RatMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
}

}  // namespace simlat
