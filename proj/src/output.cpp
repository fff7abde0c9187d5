#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "micromaser/sweep.hpp"

namespace micromaser {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Entries of the dump, 0-based in the matrix's own labelling.
constexpr int kDumped[8][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 3}, {3, 0}, {1, 2}, {2, 1}};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
    const bool dump = result.config.dump_matrix;
    out << "kappa_t,concurrence,pop_sum,ent_formation";
    if (dump)
        for (const auto& e : kDumped) {
            const std::string name = "rho" + std::to_string(e[0] + 1) + std::to_string(e[1] + 1);
            out << ',' << name << "_re," << name << "_im";
        }
    out << '\n';

    for (const SweepRow& row : result.rows) {
        out << num(row.kappa_t) << ',' << num(row.concurrence) << ',' << num(row.pop_sum) << ','
            << num(row.ent_formation);
        if (dump)
            for (const auto& e : kDumped) {
                const cplx v = row.rho.entries()(e[0], e[1]);
                out << ',' << num(v.real()) << ',' << num(v.imag());
            }
        out << '\n';
    }
}

void write_svg(std::ostream& out, const SweepResult& result, const std::string& title) {
    constexpr double width = 640, height = 400;
    constexpr double left = 60, right = 20, top = 40, bottom = 50;
    const double t0 = result.config.t_start;
    const double t1 = result.config.t_end;
    auto px = [&](double t) { return left + (t - t0) / (t1 - t0) * (width - left - right); };
    auto py = [&](double v) { return top + (1.0 - v) * (height - top - bottom); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(title) << "</text>\n";

    out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width - left - right
        << "\" height=\"" << height - top - bottom << "\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        const double y = py(k / 5.0);
        out << "<line x1=\"" << left - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << left
            << "\" y2=\"" << num(y) << "\"/>\n";
        const double x = px(t0 + (t1 - t0) * k / 5.0);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << height - bottom << "\" x2=\"" << num(x)
            << "\" y2=\"" << height - bottom + 5 << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int k = 0; k <= 5; ++k) {
        out << "<text x=\"" << left - 8 << "\" y=\"" << num(py(k / 5.0) + 4)
            << "\" text-anchor=\"end\">" << num(k / 5.0) << "</text>\n";
        const double t = t0 + (t1 - t0) * k / 5.0;
        out << "<text x=\"" << num(px(t)) << "\" y=\"" << height - bottom + 18
            << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\">&#954;t</text>\n";
    out << "</g>\n";

    auto curve = [&](auto value, const char* style) {
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" " << style
            << " points=\"";
        for (const SweepRow& row : result.rows)
            out << num(px(row.kappa_t)) << ',' << num(py(value(row))) << ' ';
        out << "\"/>\n";
    };
    curve([](const SweepRow& r) { return r.concurrence; }, "");
    curve([](const SweepRow& r) { return r.pop_sum; }, "stroke-dasharray=\"2,3\"");
    out << "</svg>\n";
}

void emit(const SweepResult& result, std::ostream& stdout_stream, const std::string& title) {
    const RunConfig& cfg = result.config;
    if (cfg.csv_path.empty()) {
        write_csv(stdout_stream, result);
    } else {
        std::ofstream f(cfg.csv_path);
        if (!f) throw std::runtime_error("cannot write CSV file '" + cfg.csv_path + "'");
        write_csv(f, result);
    }
    if (!cfg.plot_path.empty()) {
        std::ofstream f(cfg.plot_path);
        if (!f) throw std::runtime_error("cannot write plot file '" + cfg.plot_path + "'");
        write_svg(f, result, title);
    }
}

}  // namespace micromaser
