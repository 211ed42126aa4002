#include "zetamv/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "zetamv/common.hpp"
#include "zetamv/parallel.hpp"

namespace zetamv {
namespace {

struct PanelOut {
    double value = 0.0;
    double err = 0.0;
    std::int64_t nodes = 0;
    bool bad = false;
    double bad_at = 0.0;
};

// 15-point Gauss-Legendre on [-1, 1].
constexpr double kGlX[15] = {
    -0.98799251802048542849, -0.93727339240070590431, -0.8482065834104272162,
    -0.72441773136017004742, -0.57097217260853884754, -0.3941513470775633699,
    -0.2011940939974345223,  0.0,                     0.2011940939974345223,
    0.3941513470775633699,   0.57097217260853884754,  0.72441773136017004742,
    0.8482065834104272162,   0.93727339240070590431,  0.98799251802048542849,
};
constexpr double kGlW[15] = {
    0.030753241996117268355, 0.070366047488108124709, 0.10715922046717193501,
    0.13957067792615431445,  0.16626920581699393355,  0.18616100001556221103,
    0.19843148532711157646,  0.20257824192556127288,  0.19843148532711157646,
    0.18616100001556221103,  0.16626920581699393355,  0.13957067792615431445,
    0.10715922046717193501,  0.070366047488108124709, 0.030753241996117268355,
};

double step_cap(double p0, double p1, const QuadratureSpec& spec) {
    double cap = spec.max_step;
    if (spec.oscillation_aware) {
        const double t_hi = std::max(std::fabs(p0), std::fabs(p1));
        cap = std::min(cap, 0.25 / std::sqrt(t_hi + 1.0));
    }
    return cap;
}

// Composite Simpson on [p0, p1], refining h -> h/2 until the Richardson
// difference meets the target.  The returned value is the unextrapolated
// final Simpson sum (plain fourth-order rule).
PanelOut simpson_panel(const std::function<double(double)>& f, double p0,
                       double p1, const QuadratureSpec& spec) {
    PanelOut out;
    const double w = p1 - p0;
    const double cap = step_cap(p0, p1, spec);
    std::int64_t n = 2;
    while (w / static_cast<double>(n) > cap && n < (1LL << 22)) n *= 2;

    auto eval = [&](double x) {
        const double v = f(x);
        ++out.nodes;
        if (!std::isfinite(v) && !out.bad) {
            out.bad = true;
            out.bad_at = x;
        }
        return v;
    };

    double h = w / static_cast<double>(n);
    const double f0 = eval(p0);
    const double f1 = eval(p1);
    double ends = f0 + f1;
    double ends_abs = std::fabs(f0) + std::fabs(f1);
    num::Kahan odd, odd_abs, even, even_abs;
    for (std::int64_t i = 1; i < n; ++i) {
        const double v = eval(p0 + h * static_cast<double>(i));
        if (i % 2 == 1) {
            odd.add(v);
            odd_abs.add(std::fabs(v));
        } else {
            even.add(v);
            even_abs.add(std::fabs(v));
        }
    }
    if (out.bad) return out;

    double s_prev = h / 3.0 * (ends + 4.0 * odd.value() + 2.0 * even.value());
    for (int level = 0; level < 14; ++level) {
        // Halve the step: old interior nodes all become even, new midpoints odd.
        even.add(odd.value());
        even_abs.add(odd_abs.value());
        odd = num::Kahan{};
        odd_abs = num::Kahan{};
        const double h2 = 0.5 * h;
        for (std::int64_t i = 0; i < n; ++i) {
            const double v = eval(p0 + h * static_cast<double>(i) + h2);
            odd.add(v);
            odd_abs.add(std::fabs(v));
        }
        if (out.bad) return out;
        n *= 2;
        h = h2;
        const double s = h / 3.0 * (ends + 4.0 * odd.value() + 2.0 * even.value());
        const double a = h / 3.0 * (ends_abs + 4.0 * odd_abs.value() + 2.0 * even_abs.value());
        const double rich = std::fabs(s - s_prev) / 15.0;
        const double scale = std::fabs(s) + 0.01 * a;
        if (rich <= spec.target_rel_err * scale || level == 13) {
            out.value = s;
            out.err = rich + 1e-16 * a;
            return out;
        }
        s_prev = s;
    }
    out.value = s_prev;
    return out;
}

// Gauss-Legendre panel: m subpanels of 15 points each, m doubling until
// two successive levels agree.
PanelOut gauss_panel(const std::function<double(double)>& f, double p0,
                     double p1, const QuadratureSpec& spec) {
    PanelOut out;
    const double w = p1 - p0;
    const double cap = step_cap(p0, p1, spec);
    std::int64_t m = 1;
    while (w / (15.0 * static_cast<double>(m)) > cap && m < (1LL << 18)) m *= 2;

    double s_prev = 0.0;
    double a_prev = 0.0;
    bool have_prev = false;
    for (int level = 0; level < 12; ++level) {
        num::Kahan s, a;
        const double sub = w / static_cast<double>(m);
        for (std::int64_t i = 0; i < m; ++i) {
            const double c = p0 + sub * (static_cast<double>(i) + 0.5);
            const double r = 0.5 * sub;
            for (int q = 0; q < 15; ++q) {
                const double x = c + r * kGlX[q];
                const double v = f(x);
                ++out.nodes;
                if (!std::isfinite(v) && !out.bad) {
                    out.bad = true;
                    out.bad_at = x;
                }
                s.add(kGlW[q] * r * v);
                a.add(kGlW[q] * r * std::fabs(v));
            }
        }
        if (out.bad) return out;
        if (have_prev) {
            const double diff = std::fabs(s.value() - s_prev);
            const double scale = std::fabs(s.value()) + 0.01 * a.value();
            if (diff <= spec.target_rel_err * scale || level == 11) {
                out.value = s.value();
                out.err = diff + 1e-16 * a.value();
                return out;
            }
        }
        s_prev = s.value();
        a_prev = a.value();
        have_prev = true;
        m *= 2;
    }
    out.value = s_prev;
    out.err = 1e-16 * a_prev;
    return out;
}

PanelOut eval_panel(const std::function<double(double)>& f, double p0,
                    double p1, const QuadratureSpec& spec) {
    return spec.rule == QuadRule::simpson ? simpson_panel(f, p0, p1, spec)
                                          : gauss_panel(f, p0, p1, spec);
}

void validate_spec(const QuadratureSpec& spec) {
    if (!(spec.max_step > 0.0)) throw DomainError("quadrature max_step must be > 0");
    if (!(spec.target_rel_err > 0.0) || spec.target_rel_err > 0.1) {
        throw DomainError("quadrature target_rel_err must be in (0, 0.1]");
    }
    if (!(spec.panel_width > 0.0)) throw DomainError("quadrature panel_width must be > 0");
}

std::int64_t panel_count(double a, double b, const QuadratureSpec& spec) {
    if (b <= a) return 0;
    const double n = std::ceil((b - a) / spec.panel_width);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
}

void panel_bounds(double a, double b, std::int64_t np, std::int64_t i,
                  double* p0, double* p1) {
    const double w = (b - a) / static_cast<double>(np);
    *p0 = a + w * static_cast<double>(i);
    *p1 = (i + 1 == np) ? b : a + w * static_cast<double>(i + 1);
}

[[noreturn]] void throw_poisoned(double at) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "integrand returned a non-finite value near t = %.17g", at);
    throw PrecisionError(buf);
}

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t hash_setup(const std::string& id, double a, double b,
                         const QuadratureSpec& spec, std::int64_t npanels) {
    std::uint64_t h = 14695981039346656037ULL;
    h = fnv1a(id.data(), id.size(), h);
    h = fnv1a(&a, sizeof a, h);
    h = fnv1a(&b, sizeof b, h);
    h = fnv1a(&spec.max_step, sizeof spec.max_step, h);
    h = fnv1a(&spec.target_rel_err, sizeof spec.target_rel_err, h);
    h = fnv1a(&spec.panel_width, sizeof spec.panel_width, h);
    const unsigned char tag[2] = {static_cast<unsigned char>(spec.rule),
                                  static_cast<unsigned char>(spec.oscillation_aware)};
    h = fnv1a(tag, sizeof tag, h);
    h = fnv1a(&npanels, sizeof npanels, h);
    return h;
}

struct Record {
    std::int64_t index;
    double value;
    double err;
    std::int64_t nodes;
};

constexpr char kMagic[8] = {'Z', 'M', 'V', 'Q', 'C', 'K', 'P', '1'};

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec) {
    validate_spec(spec);
    if (!std::isfinite(a) || !std::isfinite(b) || b < a) {
        throw DomainError("integrate requires finite a <= b");
    }
    IntegralResult res;
    const std::int64_t np = panel_count(a, b, spec);
    if (np == 0) return res;

    std::vector<PanelOut> outs(static_cast<std::size_t>(np));
    par::for_each_index(np, [&](std::int64_t i) {
        double p0, p1;
        panel_bounds(a, b, np, i, &p0, &p1);
        outs[static_cast<std::size_t>(i)] = eval_panel(f, p0, p1, spec);
    });

    num::Kahan value;
    for (std::int64_t i = 0; i < np; ++i) {
        const PanelOut& o = outs[static_cast<std::size_t>(i)];
        if (o.bad) throw_poisoned(o.bad_at);
        value.add(o.value);
        res.err_estimate += o.err;
        res.nodes_used += o.nodes;
    }
    res.value = value.value();
    return res;
}

struct CheckpointSession::Impl {
    std::function<double(double)> f;
    std::string id;
    double a, b;
    QuadratureSpec spec;
    std::string path;
    std::int64_t npanels = 0;
    std::uint64_t hash = 0;
    std::vector<Record> records;  // prefix [0, done)
    bool resumed = false;
    std::int64_t flushed = 0;  // records persisted at last flush

    void flush() {
        std::string body;
        body.reserve(32 + records.size() * sizeof(Record));
        body.append(kMagic, sizeof kMagic);
        auto append = [&body](const void* p, std::size_t n) {
            body.append(static_cast<const char*>(p), n);
        };
        append(&hash, sizeof hash);
        append(&npanels, sizeof npanels);
        const std::int64_t done = static_cast<std::int64_t>(records.size());
        append(&done, sizeof done);
        for (const Record& r : records) append(&r, sizeof r);
        const std::uint64_t check = fnv1a(body.data(), body.size(),
                                          14695981039346656037ULL);
        append(&check, sizeof check);

        const std::string tmp = path + ".tmp";
        std::FILE* fp = std::fopen(tmp.c_str(), "wb");
        if (!fp) throw FormatError("cannot write checkpoint: " + tmp);
        const bool ok = std::fwrite(body.data(), 1, body.size(), fp) == body.size();
        const bool closed = std::fclose(fp) == 0;
        if (!ok || !closed) throw FormatError("short write on checkpoint: " + tmp);
        if (std::rename(tmp.c_str(), path.c_str()) != 0) {
            throw FormatError("cannot move checkpoint into place: " + path);
        }
        flushed = done;
    }

    void load() {
        std::FILE* fp = std::fopen(path.c_str(), "rb");
        if (!fp) return;  // fresh run
        std::string body;
        char buf[65536];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, fp)) > 0) body.append(buf, got);
        std::fclose(fp);

        const std::size_t fixed = sizeof kMagic + 8 + 8 + 8 + 8;
        if (body.size() < fixed) throw FormatError("checkpoint truncated: " + path);
        const std::uint64_t stored_check =
            *reinterpret_cast<const std::uint64_t*>(body.data() + body.size() - 8);
        const std::uint64_t check = fnv1a(body.data(), body.size() - 8,
                                          14695981039346656037ULL);
        if (stored_check != check) {
            throw FormatError("checkpoint integrity check failed: " + path);
        }
        if (std::memcmp(body.data(), kMagic, sizeof kMagic) != 0) {
            throw FormatError("checkpoint has wrong magic: " + path);
        }
        std::size_t off = sizeof kMagic;
        auto read_u64 = [&body, &off]() {
            std::uint64_t v;
            std::memcpy(&v, body.data() + off, 8);
            off += 8;
            return v;
        };
        const std::uint64_t stored_hash = read_u64();
        if (stored_hash != hash) {
            throw FormatError("checkpoint was created with a different"
                              " integrand or spec: " + path);
        }
        const auto stored_np = static_cast<std::int64_t>(read_u64());
        const auto done = static_cast<std::int64_t>(read_u64());
        if (stored_np != npanels || done < 0 || done > npanels) {
            throw FormatError("checkpoint panel bookkeeping corrupt: " + path);
        }
        if (body.size() != fixed + static_cast<std::size_t>(done) * sizeof(Record)) {
            throw FormatError("checkpoint length mismatch: " + path);
        }
        records.resize(static_cast<std::size_t>(done));
        std::memcpy(records.data(), body.data() + off,
                    static_cast<std::size_t>(done) * sizeof(Record));
        for (std::int64_t i = 0; i < done; ++i) {
            if (records[static_cast<std::size_t>(i)].index != i) {
                throw FormatError("checkpoint record order corrupt: " + path);
            }
        }
        resumed = done > 0;
        flushed = done;
    }
};

CheckpointSession::CheckpointSession(std::function<double(double)> f,
                                     std::string integrand_id, double a,
                                     double b, QuadratureSpec spec,
                                     std::string checkpoint_path)
    : impl_(new Impl) {
    validate_spec(spec);
    if (!std::isfinite(a) || !std::isfinite(b) || b < a) {
        throw DomainError("CheckpointSession requires finite a <= b");
    }
    if (checkpoint_path.empty()) {
        throw DomainError("CheckpointSession requires a checkpoint path");
    }
    impl_->f = std::move(f);
    impl_->id = std::move(integrand_id);
    impl_->a = a;
    impl_->b = b;
    impl_->spec = spec;
    impl_->path = std::move(checkpoint_path);
    impl_->npanels = panel_count(a, b, spec);
    impl_->hash = hash_setup(impl_->id, a, b, spec, impl_->npanels);
    impl_->load();
}

CheckpointSession::~CheckpointSession() = default;

bool CheckpointSession::run(std::int64_t max_new_panels) {
    Impl& im = *impl_;
    std::int64_t budget = max_new_panels < 0 ? im.npanels : max_new_panels;
    constexpr std::int64_t kChunk = 64;
    bool wrote = false;
    while (budget > 0 &&
           static_cast<std::int64_t>(im.records.size()) < im.npanels) {
        const std::int64_t lo = static_cast<std::int64_t>(im.records.size());
        const std::int64_t n =
            std::min({kChunk, budget, im.npanels - lo});
        std::vector<PanelOut> outs(static_cast<std::size_t>(n));
        par::for_each_index(n, [&](std::int64_t j) {
            double p0, p1;
            panel_bounds(im.a, im.b, im.npanels, lo + j, &p0, &p1);
            outs[static_cast<std::size_t>(j)] =
                eval_panel(im.f, p0, p1, im.spec);
        });
        for (std::int64_t j = 0; j < n; ++j) {
            const PanelOut& o = outs[static_cast<std::size_t>(j)];
            if (o.bad) {
                im.flush();  // keep the good prefix
                throw_poisoned(o.bad_at);
            }
            im.records.push_back(Record{lo + j, o.value, o.err, o.nodes});
        }
        budget -= n;
        wrote = true;
        if (im.spec.checkpoint_every > 0 &&
            static_cast<std::int64_t>(im.records.size()) - im.flushed >=
                im.spec.checkpoint_every) {
            im.flush();
        }
    }
    if (wrote || im.flushed != static_cast<std::int64_t>(im.records.size())) {
        im.flush();
    }
    return done();
}

bool CheckpointSession::done() const {
    return static_cast<std::int64_t>(impl_->records.size()) == impl_->npanels;
}

std::int64_t CheckpointSession::panels_done() const {
    return static_cast<std::int64_t>(impl_->records.size());
}

std::int64_t CheckpointSession::panels_total() const { return impl_->npanels; }

bool CheckpointSession::was_resumed() const { return impl_->resumed; }

IntegralResult CheckpointSession::result() const {
    if (!done()) {
        throw FormatError("CheckpointSession::result called before completion");
    }
    IntegralResult res;
    res.resumed = impl_->resumed;
    num::Kahan value;
    for (const Record& r : impl_->records) {
        value.add(r.value);
        res.err_estimate += r.err;
        res.nodes_used += r.nodes;
    }
    res.value = value.value();
    return res;
}

}  // namespace zetamv
