#pragma once

// Data-parallel inner loops shared by the Dickson and word orders.
//
// Every kernel has a portable scalar reference version and, on x86-64
// builds, an AVX2 version. The active table is chosen once at startup from
// the CPU's feature bits; setting WPO_KERNELS=scalar in the environment
// forces the reference path. Both tables must produce identical results on
// every input (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wpo {

using Count = std::uint32_t;  // one component of a NatVec
using Delta = std::int32_t;   // one component of a signed effect vector
using Letter = std::uint32_t; // alphabet index

namespace kernels {

enum class Backend { Scalar, Avx2 };

struct Table {
  Backend backend;
  const char* name;

  // a[i] <= b[i] for every i < n.
  bool (*leq)(const Count* a, const Count* b, std::size_t n);
  // out[i] = max(a[i], b[i]); out may alias a or b.
  void (*join)(const Count* a, const Count* b, Count* out, std::size_t n);
  // out[i] = max(a[i] - d[i], 0), saturating at UINT32_MAX when d[i] < 0.
  void (*monus)(const Count* a, const Delta* d, Count* out, std::size_t n);
  // Index of the first s[i] == x, or n when absent.
  std::size_t (*find_letter)(const Letter* s, std::size_t n, Letter x);
  // Greedy leftmost subsequence test: u embeds into v.
  bool (*embeds)(const Letter* u, std::size_t nu, const Letter* v,
                 std::size_t nv);
};

const Table& scalar();

// AVX2 table when compiled in and supported by this CPU, else nullptr.
const Table* avx2();

// Every table usable on this machine, scalar first.
std::vector<const Table*> available();

// Table used by the library operations.
const Table& active();

// Overrides the active table; returns false when the backend is unavailable.
bool select(Backend backend);

// Parses "scalar" / "avx2".
bool parse_backend(std::string_view name, Backend& out);

} // namespace kernels
} // namespace wpo
