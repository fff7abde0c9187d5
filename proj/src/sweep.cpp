#include "micromaser/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace micromaser {

void RunConfig::validate() const {
    field.validate();
    model.validate();
    if (steps < 2) throw std::invalid_argument("steps must be >= 2, got " + std::to_string(steps));
    if (!(std::isfinite(t_start) && t_start >= 0.0))
        throw std::invalid_argument("t_start must be >= 0, got " + std::to_string(t_start));
    if (!(std::isfinite(t_end) && t_end > t_start))
        throw std::invalid_argument("t_end must exceed t_start (" + std::to_string(t_start) +
                                    "), got " + std::to_string(t_end));
}

double RunConfig::time_at(int i) const {
    if (i == steps - 1) return t_end;
    return t_start + (t_end - t_start) * i / (steps - 1);
}

SecondAtom parse_atoms(const std::string& text) {
    if (text == "eg") return SecondAtom::Ground;
    if (text == "ee") return SecondAtom::Excited;
    throw std::invalid_argument("atoms must be 'eg' or 'ee', got '" + text + "'");
}

std::string to_string(SecondAtom second) { return second == SecondAtom::Ground ? "eg" : "ee"; }

bool parse_stark(const std::string& text) {
    if (text == "on") return true;
    if (text == "off") return false;
    throw std::invalid_argument("stark must be 'on' or 'off', got '" + text + "'");
}

RunConfig config_from_json(const std::string& text, RunConfig cfg) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

    try {
        std::optional<double> tail;
        for (const auto& [key, value] : doc.items()) {
            if (key == "field")
                cfg.field = FieldSpec::parse(value.get<std::string>());
            else if (key == "atoms")
                cfg.atoms = parse_atoms(value.get<std::string>());
            else if (key == "chi_over_kappa")
                cfg.model.chi_over_kappa = value.get<double>();
            else if (key == "r")
                cfg.model.r = value.get<double>();
            else if (key == "stark")
                cfg.model.stark_enabled =
                    value.is_boolean() ? value.get<bool>() : parse_stark(value.get<std::string>());
            else if (key == "t_start")
                cfg.t_start = value.get<double>();
            else if (key == "t_end")
                cfg.t_end = value.get<double>();
            else if (key == "steps")
                cfg.steps = value.get<int>();
            else if (key == "csv")
                cfg.csv_path = value.get<std::string>();
            else if (key == "plot")
                cfg.plot_path = value.get<std::string>();
            else if (key == "dump_matrix")
                cfg.dump_matrix = value.get<bool>();
            else if (key == "tail_tolerance")
                tail = value.get<double>();
            else
                throw std::invalid_argument("unknown config key '" + key + "'");
        }
        if (tail) cfg.field.tail_tolerance = *tail;
    } catch (const nlohmann::json::type_error& e) {
        throw std::invalid_argument(std::string("config value has the wrong type: ") + e.what());
    }
    return cfg;
}

RunConfig config_from_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str(), std::move(base));
}

SweepResult run_sweep(const RunConfig& cfg) {
    cfg.validate();
    const Basis basis = basis_for(cfg.atoms);
    SweepResult result{cfg, {}};
    result.rows.assign(cfg.steps, SweepRow{0, 0, 0, 0, {Matrix4c::Zero(), basis}});

    auto point = [&](int i) {
        const double t = cfg.time_at(i);
        const TwoQubitDensity rho = reduced_density(cfg.field, cfg.atoms, t, cfg.model);
        const ConcurrenceResult c = concurrence_closed(rho);
        result.rows[i] = {t, c.concurrence, c.population_sum, c.entanglement_of_formation, rho};
    };

    const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
    if (workers == 1) {
        for (int i = 0; i < cfg.steps; ++i) point(i);
        return result;
    }

    std::exception_ptr failure;
    std::mutex failure_lock;
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (int i = w; i < cfg.steps; i += workers) point(i);
                } catch (...) {
                    std::lock_guard lock(failure_lock);
                    if (!failure) failure = std::current_exception();
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
    return result;
}

}  // namespace micromaser
