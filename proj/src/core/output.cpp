#include <charconv>
#include <fstream>
#include <system_error>

#include "fburgers/error.hpp"
#include "fburgers/simulation.hpp"

namespace fburgers {

namespace {

// 17 significant digits, locale independent; -0 is written as 0.
std::string format_value(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v + 0.0, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

void write_field(const std::filesystem::path& path, const NodalField& u, const Grid& g) {
    auto out = open_for_write(path);
    out << "x,u\n";
    for (std::size_t j = 0; j < u.size(); ++j)
        out << format_value(g.nodes()[j]) << ',' << format_value(u.values[j]) << '\n';
    finish(out, path);
}

std::string optional_time(const std::optional<double>& t) { return t ? format_value(*t) : "none"; }

}  // namespace

std::string format_time(double t) {
    char buf[64];
    // 15 digits hide the representation error of k * snapshot_every
    const auto res = std::to_chars(buf, buf + sizeof buf, t + 0.0, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

void write_outputs(const RunResult& result, const RunConfig& cfg) {
    const auto& dir = cfg.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create output directory " + dir.string() + ": " + ec.message());

    const Grid g(cfg.n);

    {
        const auto path = dir / "diagnostics.csv";
        auto out = open_for_write(path);
        out << "t,mass,l2,max_u,min_u,min_slope,bkm_integral,h3,tail_fraction\n";
        for (const auto& r : result.records) {
            out << format_value(r.t) << ',' << format_value(r.mass) << ',' << format_value(r.l2) << ','
                << format_value(r.max_u) << ',' << format_value(r.min_u) << ',' << format_value(r.min_slope) << ','
                << format_value(r.bkm_integral) << ',' << format_value(r.h3) << ','
                << format_value(r.tail_fraction) << '\n';
        }
        finish(out, path);
    }

    for (const auto& snap : result.snapshots)
        write_field(dir / ("snapshot_" + format_time(snap.t) + ".csv"), snap.field, g);
    write_field(dir / "final.csv", result.final_state, g);

    const auto path = dir / "report.txt";
    auto out = open_for_write(path);
    const auto& rep = result.report;
    out << "status: " << to_string(result.status) << '\n';
    out << "steps: " << result.step_count() << '\n';
    out << "final_t: " << format_value(result.final_state.time) << '\n';
    out << "n: " << cfg.n << '\n';
    out << "gamma: " << format_value(cfg.params.gamma) << '\n';
    out << "alpha: " << format_value(cfg.params.alpha) << '\n';
    out << "dt: " << (cfg.params.dt ? format_value(*cfg.params.dt) : std::string("auto")) << '\n';
    out << "dealias: " << (cfg.params.dealias == DealiasRule::off ? "off" : "two-thirds") << '\n';
    out << "linear_only: " << (cfg.params.linear_only ? "true" : "false") << '\n';
    out << "ic: " << cfg.ic.describe() << '\n';
    if (cfg.ic.kind() == InitialCondition::Kind::random_band) out << "seed: " << cfg.ic.seed() << '\n';
    out << "predicted_t_star: " << optional_time(rep.predicted_t_star)
        << (cfg.params.effective_gamma() > 0.0 ? " (inviscid prediction)" : "") << '\n';
    out << "detected: " << (rep.detected ? "true" : "false") << '\n';
    out << "detected_t: " << optional_time(rep.detected_t) << '\n';
    out << "detection_cause: " << to_string(rep.detection_cause) << '\n';
    if (!result.failure_message.empty()) out << "failure: " << result.failure_message << '\n';
    for (const auto& w : result.warnings) out << "warning: " << w << '\n';
    finish(out, path);
}

}  // namespace fburgers
