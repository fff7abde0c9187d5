#include <array>
#include <cstdio>
#include <stdexcept>
#include <string_view>

#include "micromaser/sweep.hpp"

namespace micromaser {

namespace {

struct Panel {
    std::string_view id;
    bool thermal;
    double photons;  ///< Fock m or thermal nbar
    SecondAtom atoms;
    double chi;
    double r;  ///< 0 means the caption prints r = 0.0: Stark shift off
};

constexpr SecondAtom EG = SecondAtom::Ground;
constexpr SecondAtom EE = SecondAtom::Excited;

// Captions taken as printed, including figures 3 and 4 whose parameter
// lists do not match the discussion in the text.
constexpr std::array<Panel, 43> kPanels{{
    {"1a", false, 0, EG, 0.0, 0},    {"1b", false, 0, EG, 0.2, 0},
    {"1c", false, 0, EG, 1.0, 0},    {"1d", false, 0, EG, 2.0, 0},
    {"2a", false, 0, EG, 0.0, 0.001}, {"2b", false, 0, EG, 1.0, 0.001},
    {"3a", false, 2, EG, 0.0, 0},    {"3b", false, 2, EG, 0.5, 0},
    {"4a", false, 2, EG, 0.0, 0.001}, {"4b", false, 2, EG, 0.0, 0.5},
    {"4c", false, 2, EG, 2.0, 0.1},
    {"5a", false, 0, EE, 0.0, 0},    {"5b", false, 0, EE, 1.0, 0},
    {"6a", false, 0, EE, 0.0, 0.001}, {"6b", false, 0, EE, 0.0, 0.2},
    {"6c", false, 0, EE, 1.0, 0.001},
    {"7a", false, 2, EE, 0.0, 0},    {"7b", false, 2, EE, 0.5, 0},
    {"8a", false, 2, EE, 0.0, 0.5},  {"8b", false, 2, EE, 0.0, 2.0},
    {"8c", false, 2, EE, 0.1, 2.0},
    {"9a", true, 0.5, EG, 0.0, 0},   {"9b", true, 0.5, EG, 0.5, 0},
    {"10a", true, 0.5, EG, 0.0, 0.01}, {"10b", true, 0.5, EG, 0.0, 0.1},
    {"10c", true, 0.5, EG, 0.5, 0.3},
    {"11a", true, 2.0, EG, 0.0, 0},  {"11b", true, 2.0, EG, 0.5, 0},
    {"12a", true, 2.0, EG, 0.0, 0.01}, {"12b", true, 2.0, EG, 0.0, 0.1},
    {"12c", true, 2.0, EG, 0.5, 0.3},
    {"13a", true, 0.5, EE, 0.0, 0},  {"13b", true, 0.5, EE, 0.5, 0},
    {"14a", true, 0.5, EE, 0.0, 0.01}, {"14b", true, 0.5, EE, 0.0, 0.3},
    {"14c", true, 0.5, EE, 1.0, 0.01}, {"14d", true, 0.5, EE, 0.5, 0.3},
    {"15a", true, 2.0, EE, 0.0, 0},  {"15b", true, 2.0, EE, 0.5, 0},
    {"16a", true, 2.0, EE, 0.0, 0.01}, {"16b", true, 2.0, EE, 0.0, 0.3},
    {"16c", true, 2.0, EE, 1.0, 0.01}, {"16d", true, 2.0, EE, 0.5, 0.3},
}};

}  // namespace

RunConfig figure_preset(const std::string& id) {
    for (const Panel& panel : kPanels) {
        if (panel.id != id) continue;
        RunConfig cfg;
        cfg.field = panel.thermal ? FieldSpec::thermal(panel.photons)
                                  : FieldSpec::fock(static_cast<int>(panel.photons));
        cfg.atoms = panel.atoms;
        cfg.model.chi_over_kappa = panel.chi;
        cfg.model.stark_enabled = panel.r > 0.0;
        cfg.model.r = panel.r > 0.0 ? panel.r : 1.0;
        return cfg;
    }
    throw std::invalid_argument("unknown figure id '" + id + "' (see list-figures)");
}

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    for (const Panel& panel : kPanels) ids.emplace_back(panel.id);
    return ids;
}

std::string describe(const RunConfig& cfg) {
    char buf[160];
    if (cfg.model.stark_enabled)
        std::snprintf(buf, sizeof buf, "%s %s chi/kappa=%g stark on r=%g",
                      cfg.field.to_string().c_str(), to_string(cfg.atoms).c_str(),
                      cfg.model.chi_over_kappa, cfg.model.r);
    else
        std::snprintf(buf, sizeof buf, "%s %s chi/kappa=%g stark off",
                      cfg.field.to_string().c_str(), to_string(cfg.atoms).c_str(),
                      cfg.model.chi_over_kappa);
    return buf;
}

}  // namespace micromaser
