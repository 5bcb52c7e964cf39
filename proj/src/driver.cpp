#include "puc/driver.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "puc/samplers.hpp"
#include "puc/special.hpp"

namespace puc {
namespace {

// Open-interval guards: driver output must never touch 0 or 1, or the
// patchwork placement (y + rank - 1)/n could round onto a cell boundary.
constexpr double kCellGuard = 1e-13;
constexpr double kTiny = 1e-300;
constexpr double kBelowOne = 0x1.fffffffffffffp-1;

double clamp_cell(double y) {
    return std::min(std::max(y, kCellGuard), 1.0 - kCellGuard);
}

double clamp_open(double u) {
    return std::min(std::max(u, kTiny), kBelowOne);
}

}  // namespace

DriverSpec::DriverSpec(Kind kind, std::shared_ptr<const RankData> ranks,
                       CovMatrix block, double rho, double dof)
    : kind_(kind),
      ranks_(std::move(ranks)),
      block_(std::move(block)),
      rho_(rho),
      dof_(dof) {}

DriverSpec DriverSpec::rook(RankData ranks) {
    const int d = ranks.dim();
    return DriverSpec(Kind::rook,
                      std::make_shared<const RankData>(std::move(ranks)),
                      CovMatrix::equicorrelation(d, 0.0), 0.0, 0.0);
}

DriverSpec DriverSpec::upper_frechet(RankData ranks) {
    const int d = ranks.dim();
    return DriverSpec(Kind::upper_frechet,
                      std::make_shared<const RankData>(std::move(ranks)),
                      CovMatrix::equicorrelation(d, 1.0), 1.0, 0.0);
}

DriverSpec DriverSpec::lower_frechet(RankData ranks) {
    if (ranks.dim() != 2) {
        throw ConfigError(
            "lower_frechet driver: countermonotone blocks need exactly "
            "two columns");
    }
    return DriverSpec(Kind::lower_frechet,
                      std::make_shared<const RankData>(std::move(ranks)),
                      CovMatrix::equicorrelation(2, -1.0), -1.0, 0.0);
}

DriverSpec DriverSpec::patchwork(RankData ranks, double rho) {
    const int d = ranks.dim();
    const double lo = d > 1 ? -1.0 / static_cast<double>(d - 1) : -1.0;
    if (!(rho >= lo && rho <= 1.0)) {
        throw ConfigError(
            "patchwork driver: rho outside the positive-semidefinite "
            "range for this dimension");
    }
    return DriverSpec(Kind::patchwork_rho,
                      std::make_shared<const RankData>(std::move(ranks)),
                      CovMatrix::equicorrelation(d, rho), rho, 0.0);
}

DriverSpec DriverSpec::gaussian(CovMatrix sigma) {
    return DriverSpec(Kind::gaussian, nullptr, std::move(sigma), 0.0, 0.0);
}

DriverSpec DriverSpec::student_t(CovMatrix sigma, double dof) {
    if (!(dof > 0.0)) {
        throw ConfigError("student_t driver: dof must be positive");
    }
    return DriverSpec(Kind::student_t, nullptr, std::move(sigma), 0.0, dof);
}

bool DriverSpec::is_patchwork() const {
    switch (kind_) {
        case Kind::rook:
        case Kind::upper_frechet:
        case Kind::lower_frechet:
        case Kind::patchwork_rho:
            return true;
        case Kind::gaussian:
        case Kind::student_t:
            return false;
    }
    return false;
}

const RankData& DriverSpec::ranks() const {
    if (!ranks_) {
        throw ConfigError("driver has no rank data");
    }
    return *ranks_;
}

int DriverSpec::dim() const {
    return is_patchwork() ? ranks_->dim() : block_.dim();
}

std::string DriverSpec::label() const {
    char buf[64];
    switch (kind_) {
        case Kind::rook:
            return "rook";
        case Kind::upper_frechet:
            return "upper-frechet";
        case Kind::lower_frechet:
            return "lower-frechet";
        case Kind::patchwork_rho:
            std::snprintf(buf, sizeof buf, "patchwork(rho=%g)", rho_);
            return buf;
        case Kind::gaussian:
            return "gaussian";
        case Kind::student_t:
            std::snprintf(buf, sizeof buf, "t(dof=%g)", dof_);
            return buf;
    }
    return "unknown";
}

DriverSampler::DriverSampler(DriverSpec spec)
    : spec_(std::move(spec)),
      factor_(psd_factor(spec_.block())),
      z_(spec_.dim()),
      x_(spec_.dim()) {}

int DriverSampler::draw_row(RandomSource& rng, double* u) {
    const int d = spec_.dim();
    if (spec_.is_patchwork()) {
        const RankData& ranks = spec_.ranks();
        const int n = ranks.count();
        const double dn = static_cast<double>(n);
        const int cell =
            static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        for (int k = 0; k < d; ++k) {
            z_(k) = rng.next_std_normal();
        }
        x_.noalias() = factor_ * z_;
        for (int k = 0; k < d; ++k) {
            const double y = clamp_cell(norm_cdf(x_(k)));
            const double rank = static_cast<double>(
                ranks.column(k)[static_cast<std::size_t>(cell)]);
            u[k] = (y + rank - 1.0) / dn;
        }
        return cell;
    }

    for (int k = 0; k < d; ++k) {
        z_(k) = rng.next_std_normal();
    }
    x_.noalias() = factor_ * z_;
    if (spec_.kind() == DriverSpec::Kind::student_t) {
        const double w = sample_chi_square(rng, spec_.dof());
        const double scale = std::sqrt(spec_.dof() / w);
        for (int k = 0; k < d; ++k) {
            u[k] = clamp_open(student_t_cdf(x_(k) * scale, spec_.dof()));
        }
    } else {
        for (int k = 0; k < d; ++k) {
            u[k] = clamp_open(norm_cdf(x_(k)));
        }
    }
    return -1;
}

DriverSample sample_driver(const DriverSpec& spec, long count,
                           RandomSource& rng) {
    if (count < 0) {
        throw ConfigError("sample_driver: count must be nonnegative");
    }
    const int d = spec.dim();
    DriverSampler sampler(spec);

    DriverSample out;
    out.u.resize(count, d);
    std::vector<double> row(static_cast<std::size_t>(d));
    if (spec.is_patchwork()) {
        out.cells.resize(static_cast<std::size_t>(count));
    }
    for (long i = 0; i < count; ++i) {
        const int cell = sampler.draw_row(rng, row.data());
        for (int k = 0; k < d; ++k) {
            out.u(i, k) = row[static_cast<std::size_t>(k)];
        }
        if (!out.cells.empty()) {
            out.cells[static_cast<std::size_t>(i)] = cell;
        }
    }
    return out;
}

}  // namespace puc
