#pragma once

#include <string>
#include <vector>

namespace qmp {

enum class SystemKind { kTensor, kFermion, kBell };
enum class Purity { kPure, kMixed };

/// Parsed system descriptor. Grammar:
///   qubits:N | tensor:AxBx... | fermi:R,N | bell:2222, optionally ":pure" or ":mixed".
struct SystemDescriptor {
  SystemKind kind = SystemKind::kTensor;
  std::vector<int> dims;  // tensor factors
  int r = 0;              // orbitals
  int n = 0;              // particles
  Purity purity = Purity::kPure;

  bool is_qubit_array() const;
  std::string to_string() const;

  static SystemDescriptor parse(const std::string& text);
  static SystemDescriptor tensor(std::vector<int> dims, Purity p = Purity::kPure);
  static SystemDescriptor fermion(int r, int n, Purity p = Purity::kPure);
};

bool operator==(const SystemDescriptor& a, const SystemDescriptor& b);

}  // namespace qmp
