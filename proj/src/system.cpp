#include "qmp/system.hpp"

#include <sstream>

#include "qmp/error.hpp"

namespace qmp {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_positive(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::kUnknownDescriptor, "bad integer in descriptor: " + context);
  }
  if (used != s.size() || v <= 0) {
    fail(ErrorCode::kUnknownDescriptor, "bad integer in descriptor: " + context);
  }
  return v;
}

}  // namespace

bool SystemDescriptor::is_qubit_array() const {
  if (kind != SystemKind::kTensor) return false;
  for (int d : dims) {
    if (d != 2) return false;
  }
  return !dims.empty();
}

std::string SystemDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case SystemKind::kTensor:
      if (is_qubit_array()) {
        os << "qubits:" << dims.size();
      } else {
        os << "tensor:";
        for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "x" : "") << dims[i];
      }
      break;
    case SystemKind::kFermion: os << "fermi:" << r << "," << n; break;
    case SystemKind::kBell: os << "bell:2222"; break;
  }
  if (kind != SystemKind::kBell) os << (purity == Purity::kPure ? ":pure" : ":mixed");
  return os.str();
}

SystemDescriptor SystemDescriptor::parse(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    fail(ErrorCode::kUnknownDescriptor, "unknown system descriptor: " + text);
  }
  SystemDescriptor d;
  if (parts.size() == 3) {
    if (parts[2] == "pure") d.purity = Purity::kPure;
    else if (parts[2] == "mixed") d.purity = Purity::kMixed;
    else fail(ErrorCode::kUnknownDescriptor, "unknown purity tag: " + parts[2]);
  }
  const std::string& kind = parts[0];
  const std::string& body = parts[1];
  if (kind == "qubits") {
    const int n = parse_positive(body, text);
    d.kind = SystemKind::kTensor;
    d.dims.assign(n, 2);
  } else if (kind == "tensor") {
    d.kind = SystemKind::kTensor;
    for (const auto& f : split(body, 'x')) d.dims.push_back(parse_positive(f, text));
  } else if (kind == "fermi") {
    auto rn = split(body, ',');
    if (rn.size() != 2) fail(ErrorCode::kUnknownDescriptor, "fermi descriptor needs r,n");
    d.kind = SystemKind::kFermion;
    d.r = parse_positive(rn[0], text);
    d.n = parse_positive(rn[1], text);
    if (d.n >= d.r) fail(ErrorCode::kUnknownDescriptor, "fermi descriptor needs n < r");
  } else if (kind == "bell") {
    if (body != "2222") fail(ErrorCode::kUnknownDescriptor, "only bell:2222 is supported");
    d.kind = SystemKind::kBell;
  } else {
    fail(ErrorCode::kUnknownDescriptor, "unknown system kind: " + kind);
  }
  return d;
}

SystemDescriptor SystemDescriptor::tensor(std::vector<int> dims, Purity p) {
  SystemDescriptor d;
  d.kind = SystemKind::kTensor;
  d.dims = std::move(dims);
  d.purity = p;
  return d;
}

SystemDescriptor SystemDescriptor::fermion(int r, int n, Purity p) {
  SystemDescriptor d;
  d.kind = SystemKind::kFermion;
  d.r = r;
  d.n = n;
  d.purity = p;
  return d;
}

bool operator==(const SystemDescriptor& a, const SystemDescriptor& b) {
  return a.kind == b.kind && a.dims == b.dims && a.r == b.r && a.n == b.n &&
         a.purity == b.purity;
}

}  // namespace qmp
