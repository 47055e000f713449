#include "output.hpp"

#include <charconv>

#include "csswg/error.hpp"

namespace csswg::cli {

namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

DiagnosticsWriter::DiagnosticsWriter(const std::filesystem::path& path)
    : out_(open_for_writing(path)) {
  out_ << "t,mass,energy,boundary_mass,continuity_residual,reduction_error\n";
}

void DiagnosticsWriter::write(const Diagnostics& d) {
  out_ << format_number(d.t) << ',' << format_number(d.mass) << ',' << format_number(d.energy) << ','
       << format_number(d.boundary_mass) << ',' << optional_number(d.continuity_residual) << ','
       << optional_number(d.reduction_error) << '\n';
}

ResidualWriter::ResidualWriter(const std::filesystem::path& path) : out_(open_for_writing(path)) {
  out_ << "eps,beta,g,residual,quintic_fit,runtime_s\n";
}

void ResidualWriter::write(double eps, double beta, double g, double residual,
                           double quintic_fit, double runtime_s) {
  out_ << format_number(eps) << ',' << format_number(beta) << ',' << format_number(g) << ','
       << format_number(residual) << ',' << format_number(quintic_fit) << ','
       << format_number(runtime_s) << '\n';
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out = open_for_writing(path);
  out << j.dump(2) << '\n';
}

}  // namespace csswg::cli
