#ifndef TLSM_IO_HPP
#define TLSM_IO_HPP

#include "tlsm/solver.hpp"
#include "tlsm/tensor.hpp"

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlsm {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tensor file, version 1.  Header: 8-byte magic "TLSMTNS1", three u64
/// little-endian dims, one dtype byte (0x01 = float64).  Payload: float64
/// little-endian entries in the canonical layout.  Total size is
/// 33 + 8 * n1 * n2 * n3 bytes; the round trip is bit-exact.
inline constexpr std::array<char, 8> kTensorMagic = {'T', 'L', 'S', 'M', 'T', 'N', 'S', '1'};
inline constexpr unsigned char kDtypeFloat64 = 0x01;
inline constexpr std::size_t kTensorHeaderBytes = 33;

void write_tensor(const std::filesystem::path& path, const Tensor3& t);
Tensor3 read_tensor(const std::filesystem::path& path);

/// Iteration history CSV: '#'-prefixed metadata lines, then the fixed header
/// iter,psnr_db,ssim,res_z,res_d1,res_d2.  Metric fields stay empty when no
/// reference was supplied.
void write_history_csv(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, std::string>>& metadata,
                       const std::vector<IterationRecord>& history);

} // namespace tlsm

#endif
