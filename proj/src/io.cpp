#include "tlsm/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tlsm {

namespace {

// Explicit little-endian encoding keeps the format bit-stable regardless of
// host byte order.
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

} // namespace

void write_tensor(const std::filesystem::path& path, const Tensor3& t) {
    std::string buf;
    buf.reserve(kTensorHeaderBytes + 8 * t.size());
    buf.append(kTensorMagic.data(), kTensorMagic.size());
    put_u64(buf, t.n1());
    put_u64(buf, t.n2());
    put_u64(buf, t.n3());
    buf.push_back(static_cast<char>(kDtypeFloat64));
    for (double v : t.data()) put_u64(buf, std::bit_cast<std::uint64_t>(v));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

Tensor3 read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());

    if (buf.size() < kTensorHeaderBytes ||
        std::memcmp(buf.data(), kTensorMagic.data(), kTensorMagic.size()) != 0)
        throw IoError("not a tensor file: " + path.string());
    const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
    const std::uint64_t n1 = get_u64(p + 8);
    const std::uint64_t n2 = get_u64(p + 16);
    const std::uint64_t n3 = get_u64(p + 24);
    if (p[32] != kDtypeFloat64)
        throw IoError("unsupported dtype tag in " + path.string());
    const std::uint64_t count = n1 * n2 * n3;
    if (n1 == 0 || n2 == 0 || n3 == 0 ||
        buf.size() != kTensorHeaderBytes + 8 * count)
        throw IoError("corrupt tensor file (size mismatch): " + path.string());

    Tensor3 t(n1, n2, n3);
    for (std::uint64_t i = 0; i < count; ++i)
        t.data()[i] = std::bit_cast<double>(get_u64(p + kTensorHeaderBytes + 8 * i));
    return t;
}

void write_history_csv(const std::filesystem::path& path,
                       const std::vector<std::pair<std::string, std::string>>& metadata,
                       const std::vector<IterationRecord>& history) {
    std::ostringstream out;
    for (const auto& [key, value] : metadata)
        out << "# " << key << " = " << value << "\n";
    out << "iter,psnr_db,ssim,res_z,res_d1,res_d2\n";
    out << std::setprecision(12);
    for (const IterationRecord& rec : history) {
        out << rec.iter << ',';
        if (rec.psnr_db) out << *rec.psnr_db;
        out << ',';
        if (rec.ssim) out << *rec.ssim;
        out << ',' << rec.res_z << ',' << rec.res_d1 << ',' << rec.res_d2 << '\n';
    }

    std::ofstream file(path, std::ios::trunc);
    if (!file) throw IoError("cannot open for writing: " + path.string());
    file << out.str();
    if (!file) throw IoError("write failed: " + path.string());
}

} // namespace tlsm
