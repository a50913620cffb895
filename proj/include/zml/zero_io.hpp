#ifndef ZML_ZERO_IO_HPP
#define ZML_ZERO_IO_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "zml/errors.hpp"
#include "zml/zeros.hpp"

namespace zml {

inline constexpr std::array<char, 4> zero_file_magic{'Z', 'M', 'L', '1'};
inline constexpr std::uint8_t zero_file_version = 1;
inline constexpr std::size_t zero_record_bytes = 32;

namespace detail {

inline std::uint64_t fnv1a64(const std::vector<unsigned char>& bytes, std::size_t n)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline void put_u64(std::vector<unsigned char>& out, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xffU));
    }
}

inline std::uint64_t get_u64(const std::vector<unsigned char>& in, std::size_t pos)
{
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
    }
    return v;
}

inline std::string meta_path(const std::string& path) { return path + ".meta.json"; }

} // namespace detail

// Binary layout (little-endian): "ZML1", u8 version, u64 count, count records
// of (u64 index, f64 gamma, f64 abs_zeta_prime, f64 gamma_error), then an
// FNV-1a 64 checksum of every preceding byte. Window bounds and the
// evaluation-config hash go to a JSON sidecar next to the file.
inline void save_zeros(const zero_list& list, const std::string& path)
{
    std::vector<unsigned char> buf;
    buf.reserve(4 + 1 + 8 + list.size() * zero_record_bytes + 8);
    buf.insert(buf.end(), zero_file_magic.begin(), zero_file_magic.end());
    buf.push_back(zero_file_version);
    detail::put_u64(buf, list.size());
    for (const auto& r : list) {
        detail::put_u64(buf, r.index);
        detail::put_u64(buf, std::bit_cast<std::uint64_t>(r.gamma));
        detail::put_u64(buf, std::bit_cast<std::uint64_t>(r.abs_zeta_prime));
        detail::put_u64(buf, std::bit_cast<std::uint64_t>(r.gamma_error));
    }
    detail::put_u64(buf, detail::fnv1a64(buf, buf.size()));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw malformed_file_error("save_zeros: cannot open " + path + " for writing");
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) {
        throw malformed_file_error("save_zeros: write failed for " + path);
    }

    nlohmann::json meta = {{"format", "ZML1"},
                           {"t_lo", list.t_lo},
                           {"t_hi", list.t_hi},
                           {"count", list.size()},
                           {"eval_config_hash", list.eval_config_hash}};
    std::ofstream mout(detail::meta_path(path), std::ios::trunc);
    mout << meta.dump(2) << '\n';
    if (!mout) {
        throw malformed_file_error("save_zeros: cannot write " + detail::meta_path(path));
    }
}

// Loads and re-validates a zero cache. A differing evaluation-config hash is
// reported through config_mismatch, not raised.
inline zero_list load_zeros(const std::string& path,
                            std::optional<std::uint64_t> expected_config_hash = std::nullopt)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw malformed_file_error("load_zeros: cannot open " + path);
    }
    const std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
    constexpr std::size_t header = 4 + 1 + 8;
    if (buf.size() < header + 8 ||
        !std::equal(zero_file_magic.begin(), zero_file_magic.end(), buf.begin())) {
        throw malformed_file_error("load_zeros: " + path + " is not a zero cache");
    }
    if (buf[4] != zero_file_version) {
        throw malformed_file_error("load_zeros: unsupported version " + std::to_string(buf[4]));
    }
    const std::uint64_t count = detail::get_u64(buf, 5);
    if (count > (buf.size() - header - 8) / zero_record_bytes ||
        buf.size() != header + count * zero_record_bytes + 8) {
        throw malformed_file_error("load_zeros: " + path + " is truncated or has trailing bytes");
    }
    const std::size_t body = buf.size() - 8;
    if (detail::fnv1a64(buf, body) != detail::get_u64(buf, body)) {
        throw checksum_error("load_zeros: checksum mismatch in " + path);
    }

    zero_list list;
    list.records.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t pos = header + i * zero_record_bytes;
        auto& r = list.records[i];
        r.index = detail::get_u64(buf, pos);
        r.gamma = std::bit_cast<double>(detail::get_u64(buf, pos + 8));
        r.abs_zeta_prime = std::bit_cast<double>(detail::get_u64(buf, pos + 16));
        r.gamma_error = std::bit_cast<double>(detail::get_u64(buf, pos + 24));
    }

    std::ifstream min(detail::meta_path(path));
    if (!min) {
        throw malformed_file_error("load_zeros: missing sidecar " + detail::meta_path(path));
    }
    try {
        const auto meta = nlohmann::json::parse(min);
        list.t_lo = meta.at("t_lo").get<double>();
        list.t_hi = meta.at("t_hi").get<double>();
        list.eval_config_hash = meta.at("eval_config_hash").get<std::uint64_t>();
        if (meta.at("count").get<std::uint64_t>() != count) {
            throw malformed_file_error("load_zeros: sidecar count disagrees with " + path);
        }
    } catch (const nlohmann::json::exception& e) {
        throw malformed_file_error("load_zeros: bad sidecar for " + path + ": " + e.what());
    }

    validate_zero_list(list);
    if (expected_config_hash && *expected_config_hash != list.eval_config_hash) {
        list.config_mismatch = true;
    }
    return list;
}

inline void write_zeros_csv(const zero_list& list, std::ostream& os)
{
    os << "index,gamma,abs_zeta_prime,gamma_error\n";
    char line[128];
    for (const auto& r : list) {
        std::snprintf(line, sizeof line, "%llu,%.17g,%.17g,%.17g\n",
                      static_cast<unsigned long long>(r.index), r.gamma, r.abs_zeta_prime,
                      r.gamma_error);
        os << line;
    }
}

} // namespace zml

#endif // ZML_ZERO_IO_HPP
