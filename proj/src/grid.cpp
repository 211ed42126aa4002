#include "zetamv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>

#include "zetamv/common.hpp"
#include "zetamv/parallel.hpp"
#include "zetamv/zeta.hpp"

namespace zetamv {
namespace {

constexpr double kSpan = 1024.0;
constexpr char kMagic[8] = {'Z', 'M', 'V', 'G', 'R', 'I', 'D', '1'};
constexpr std::uint32_t kVersion = 1;

int block_level(std::int64_t b) {
    // Smallest m with 1024/2^m <= 0.25/sqrt(1024(b+1)+1).
    const double need = 4096.0 * std::sqrt(kSpan * static_cast<double>(b + 1) + 1.0);
    int m = 1;
    while (std::ldexp(1.0, m) < need && m < 30) ++m;
    return m;
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

// Cumulative composite Simpson over equally spaced samples.  Prefix at an
// odd node uses the one-sided three-point rule, keeping every node
// fourth-order accurate.
void simpson_prefix(const std::vector<double>& f, double h,
                    std::vector<double>* out) {
    const std::size_t n = f.size();
    out->resize(n);
    (*out)[0] = 0.0;
    for (std::size_t k = 0; k + 2 < n; k += 2) {
        (*out)[k + 1] = (*out)[k] + h / 12.0 * (5.0 * f[k] + 8.0 * f[k + 1] - f[k + 2]);
        (*out)[k + 2] = (*out)[k] + h / 3.0 * (f[k] + 4.0 * f[k + 1] + f[k + 2]);
    }
}

// Simpson total using every other sample (step 2h), for the Richardson
// error estimate of the full-resolution block integral.
double simpson_coarse(const std::vector<double>& f, double h) {
    num::Kahan s;
    for (std::size_t k = 0; k + 4 < f.size() + 1; k += 4) {
        s.add(2.0 * h / 3.0 * (f[k] + 4.0 * f[k + 2] + f[k + 4]));
    }
    return s.value();
}

}  // namespace

MomentGrid::MomentGrid(double t_max, const std::string& cache_dir, int order)
    : order_(order) {
    if (!std::isfinite(t_max) || t_max <= 0.0) {
        throw DomainError("MomentGrid requires finite t_max > 0");
    }
    if (order < 0 || order > 4) {
        throw DomainError("MomentGrid order must be in [0, 4]");
    }
    const auto nblocks =
        static_cast<std::int64_t>(std::ceil(t_max / kSpan));
    t_end_ = kSpan * static_cast<double>(nblocks);
    blocks_.resize(static_cast<std::size_t>(nblocks));
    for (std::int64_t b = 0; b < nblocks; ++b) {
        Block& blk = blocks_[static_cast<std::size_t>(b)];
        blk.m = block_level(b);
        blk.h = kSpan / std::ldexp(1.0, blk.m);
    }

    std::string cache_path;
    if (!cache_dir.empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "/moment_grid_o%d_b%lld.bin", order_,
                      static_cast<long long>(nblocks));
        cache_path = cache_dir + name;
        if (load_cache(cache_path)) {
            loaded_ = true;
            return;
        }
    }
    build();
    if (!cache_path.empty()) save_cache(cache_path);
}

void MomentGrid::build() {
    const auto nblocks = static_cast<std::int64_t>(blocks_.size());
    par::for_each_index(nblocks, [&](std::int64_t b) {
        Block& blk = blocks_[static_cast<std::size_t>(b)];
        const std::size_t n = (static_cast<std::size_t>(1) << blk.m) + 1;
        const double t0 = kSpan * static_cast<double>(b);
        std::vector<double> f2(n), f4(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = t0 + blk.h * static_cast<double>(i);
            const double z = riemann_siegel_Z(t, order_).z;
            const double z2 = z * z;
            f2[i] = z2;
            f4[i] = z2 * z2;
        }
        simpson_prefix(f2, blk.h, &blk.p2);
        simpson_prefix(f4, blk.h, &blk.p4);
        blk.err2 = std::fabs(blk.p2.back() - simpson_coarse(f2, blk.h)) / 15.0;
        blk.err4 = std::fabs(blk.p4.back() - simpson_coarse(f4, blk.h)) / 15.0;
    });
    // Serial pass: lift block-local prefixes to absolute ones.
    double base2 = 0.0, base4 = 0.0;
    for (auto& blk : blocks_) {
        const double next2 = base2 + blk.p2.back();
        const double next4 = base4 + blk.p4.back();
        for (auto& v : blk.p2) v += base2;
        for (auto& v : blk.p4) v += base4;
        base2 = next2;
        base4 = next4;
    }
}

bool MomentGrid::load_cache(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) return false;
    // Whole-file read with incremental checksum; layout must match
    // save_cache exactly.
    auto fail = [&fp]() {
        std::fclose(fp);
        return false;
    };
    char magic[8];
    if (std::fread(magic, 1, 8, fp) != 8 || std::memcmp(magic, kMagic, 8) != 0) {
        return fail();
    }
    std::uint64_t check = fnv1a(magic, 8, 14695981039346656037ULL);
    auto read_raw = [&](void* dst, std::size_t len) {
        if (std::fread(dst, 1, len, fp) != len) return false;
        check = fnv1a(dst, len, check);
        return true;
    };
    std::uint32_t version;
    std::int32_t order;
    std::int64_t nblocks;
    if (!read_raw(&version, 4) || !read_raw(&order, 4) || !read_raw(&nblocks, 8)) {
        return fail();
    }
    if (version != kVersion || order != order_ ||
        nblocks != static_cast<std::int64_t>(blocks_.size())) {
        return fail();
    }
    for (auto& blk : blocks_) {
        std::int32_t m;
        if (!read_raw(&m, 4) || m != blk.m) return fail();
        if (!read_raw(&blk.err2, 8) || !read_raw(&blk.err4, 8)) return fail();
    }
    for (auto& blk : blocks_) {
        const std::size_t n = (static_cast<std::size_t>(1) << blk.m) + 1;
        blk.p2.resize(n);
        blk.p4.resize(n);
        if (!read_raw(blk.p2.data(), n * 8)) return fail();
        if (!read_raw(blk.p4.data(), n * 8)) return fail();
    }
    std::uint64_t stored;
    if (std::fread(&stored, 1, 8, fp) != 8 || stored != check) return fail();
    std::fclose(fp);
    return true;
}

void MomentGrid::save_cache(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    std::FILE* fp = std::fopen(tmp.c_str(), "wb");
    if (!fp) return;  // cache is best-effort
    std::uint64_t check = 14695981039346656037ULL;
    bool ok = true;
    auto write_raw = [&](const void* src, std::size_t len) {
        if (!ok) return;
        if (std::fwrite(src, 1, len, fp) != len) {
            ok = false;
            return;
        }
        check = fnv1a(src, len, check);
    };
    write_raw(kMagic, 8);
    write_raw(&kVersion, 4);
    const std::int32_t order = order_;
    write_raw(&order, 4);
    const auto nblocks = static_cast<std::int64_t>(blocks_.size());
    write_raw(&nblocks, 8);
    for (const auto& blk : blocks_) {
        const std::int32_t m = blk.m;
        write_raw(&m, 4);
        write_raw(&blk.err2, 8);
        write_raw(&blk.err4, 8);
    }
    for (const auto& blk : blocks_) {
        write_raw(blk.p2.data(), blk.p2.size() * 8);
        write_raw(blk.p4.data(), blk.p4.size() * 8);
    }
    if (ok && std::fwrite(&check, 1, 8, fp) != 8) ok = false;
    if (std::fclose(fp) != 0) ok = false;
    if (ok) {
        std::rename(tmp.c_str(), path.c_str());
    } else {
        std::remove(tmp.c_str());
    }
}

std::int64_t MomentGrid::node_count() const {
    std::int64_t n = 0;
    for (const auto& blk : blocks_) {
        n += static_cast<std::int64_t>(blk.p2.size());
    }
    return n;
}

const MomentGrid::Block& MomentGrid::block_for(double T, double* local) const {
    if (!std::isfinite(T) || T < 0.0 || T > t_end_) {
        throw DomainError("MomentGrid query outside [0, t_end]");
    }
    auto b = static_cast<std::int64_t>(T / kSpan);
    if (b >= static_cast<std::int64_t>(blocks_.size())) {
        b = static_cast<std::int64_t>(blocks_.size()) - 1;
    }
    const Block& blk = blocks_[static_cast<std::size_t>(b)];
    *local = (T - kSpan * static_cast<double>(b)) / blk.h;
    return blk;
}

namespace {

double sample_prefix(const std::vector<double>& p, double local) {
    const double r = std::floor(local + 0.5);
    if (std::fabs(local - r) < 1e-9) {
        return p[static_cast<std::size_t>(r)];
    }
    const auto lo = static_cast<std::size_t>(local);
    const double frac = local - std::floor(local);
    return p[lo] * (1.0 - frac) + p[lo + 1] * frac;
}

}  // namespace

double MomentGrid::prefix_pow2(double T) const {
    double local;
    const Block& blk = block_for(T, &local);
    return sample_prefix(blk.p2, local);
}

double MomentGrid::prefix_pow4(double T) const {
    double local;
    const Block& blk = block_for(T, &local);
    return sample_prefix(blk.p4, local);
}

double MomentGrid::prefix_err2(double T) const {
    double local;
    block_for(T, &local);
    double e = 0.0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        e += blocks_[b].err2;
        if (kSpan * static_cast<double>(b + 1) >= T) break;
    }
    return e;
}

double MomentGrid::prefix_err4(double T) const {
    double local;
    block_for(T, &local);
    double e = 0.0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        e += blocks_[b].err4;
        if (kSpan * static_cast<double>(b + 1) >= T) break;
    }
    return e;
}

std::vector<double> MomentGrid::integrate_nodes_multi(
    const std::vector<double>& points,
    const std::function<double(double, double, double)>& F) const {
    if (points.empty()) return {};
    struct Target {
        std::int64_t block;
        std::size_t node;
        std::size_t slot;  // position in the input vector
    };
    std::vector<Target> targets;
    targets.reserve(points.size());
    std::int64_t last_block = 0;
    for (std::size_t s = 0; s < points.size(); ++s) {
        double local;
        const Block& blk = block_for(points[s], &local);
        const double r = std::floor(local + 0.5);
        if (std::fabs(local - r) > 1e-9) {
            throw DomainError("integrate_nodes requires grid-aligned endpoints");
        }
        const auto b = static_cast<std::int64_t>(&blk - blocks_.data());
        targets.push_back(Target{b, static_cast<std::size_t>(r), s});
        last_block = std::max(last_block, b);
    }
    std::sort(targets.begin(), targets.end(), [](const Target& x, const Target& y) {
        return x.block != y.block ? x.block < y.block : x.node < y.node;
    });

    // Parallel over blocks: each produces its total and the block-local
    // prefix value at every requested node inside it.
    const std::int64_t nb = last_block + 1;
    std::vector<double> block_total(static_cast<std::size_t>(nb), 0.0);
    std::vector<double> partial(targets.size(), 0.0);
    par::for_each_index(nb, [&](std::int64_t b) {
        const Block& blk = blocks_[static_cast<std::size_t>(b)];
        const std::size_t n = blk.p2.size();
        const double t0 = kSpan * static_cast<double>(b);
        // Requested nodes in this block, ascending.
        std::size_t ti = 0;
        while (ti < targets.size() && targets[ti].block < b) ++ti;
        std::size_t te = ti;
        while (te < targets.size() && targets[te].block == b) ++te;

        auto eval = [&](std::size_t i) {
            const double t = t0 + blk.h * static_cast<double>(i);
            return F(t, blk.p2[i], blk.p4[i]);
        };
        auto emit = [&](std::size_t node, double value) {
            for (std::size_t q = ti; q < te; ++q) {
                if (targets[q].node == node) partial[q] = value;
            }
        };
        emit(0, 0.0);
        double acc = 0.0;  // Simpson prefix at even node k
        double f0 = eval(0);
        for (std::size_t k = 0; k + 2 <= n - 1; k += 2) {
            const double f1 = eval(k + 1);
            const double f2v = eval(k + 2);
            emit(k + 1, acc + blk.h / 12.0 * (5.0 * f0 + 8.0 * f1 - f2v));
            acc += blk.h / 3.0 * (f0 + 4.0 * f1 + f2v);
            emit(k + 2, acc);
            f0 = f2v;
        }
        block_total[static_cast<std::size_t>(b)] = acc;
    });

    // Serial fold: absolute value at each target = sum of earlier block
    // totals plus the block-local partial.
    std::vector<double> base(static_cast<std::size_t>(nb) + 1, 0.0);
    num::Kahan run;
    for (std::int64_t b = 0; b < nb; ++b) {
        run.add(block_total[static_cast<std::size_t>(b)]);
        base[static_cast<std::size_t>(b) + 1] = run.value();
    }
    std::vector<double> out(points.size(), 0.0);
    for (std::size_t q = 0; q < targets.size(); ++q) {
        out[targets[q].slot] =
            base[static_cast<std::size_t>(targets[q].block)] + partial[q];
    }
    return out;
}

double MomentGrid::integrate_nodes(
    double T0, double T1,
    const std::function<double(double, double, double)>& F) const {
    if (T1 < T0) throw DomainError("integrate_nodes requires T0 <= T1");
    const auto v = integrate_nodes_multi({T0, T1}, F);
    return v[1] - v[0];
}

}  // namespace zetamv
