#include "confhodge/output.hpp"

#include <sstream>
#include <stdexcept>

namespace confhodge::io {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw std::invalid_argument("unknown format: " + name);
}

ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

std::string format_series(const TruncatedSeries& s, int genus, int punctures,
                          Format f, bool zmode) {
    switch (f) {
        case Format::json: {
            ordered_json doc;
            doc["genus"] = genus;
            doc["punctures"] = punctures;
            doc[zmode ? "zmax" : "tmax"] = s.tmax();
            auto& terms = doc["terms"] = ordered_json::array();
            for (const auto& [m, c] : s.poly().terms()) {
                ordered_json term;
                term["x"] = m.ex;
                term["y"] = m.ey;
                if (!zmode) term["u"] = m.eu;
                term[zmode ? "z" : "t"] = m.et;
                term["c"] = int_to_json(c);
                terms.push_back(std::move(term));
            }
            return doc.dump() + "\n";
        }
        case Format::csv: {
            std::ostringstream out;
            out << (zmode ? "x,y,z,c\n" : "x,y,u,t,c\n");
            for (const auto& [m, c] : s.poly().terms()) {
                out << m.ex << ',' << m.ey << ',';
                if (!zmode) out << m.eu << ',';
                out << m.et << ',' << c.get_str() << '\n';
            }
            return out.str();
        }
        case Format::text:
            return polynomial_text(s.poly(), zmode) + "\n";
    }
    throw std::logic_error("unreachable");
}

std::string format_table(const genfun::HodgeTable& table, int tmax, Format f,
                         bool signed_mode) {
    const char* value_key = signed_mode ? "c" : "h";
    auto value_of = [&](const genfun::HodgeKey& k, const Int& h) {
        return (signed_mode && k.i % 2 != 0) ? Int(-h) : h;
    };
    switch (f) {
        case Format::json: {
            ordered_json doc;
            doc["genus"] = table.genus;
            doc["punctures"] = table.punctures;
            doc["tmax"] = tmax;
            auto& entries = doc["entries"] = ordered_json::array();
            for (const auto& [k, h] : table.entries) {
                ordered_json e;
                e["n"] = k.n;
                e["i"] = k.i;
                e["w1"] = k.w1;
                e["w2"] = k.w2;
                e[value_key] = int_to_json(value_of(k, h));
                entries.push_back(std::move(e));
            }
            return doc.dump() + "\n";
        }
        case Format::csv: {
            std::ostringstream out;
            out << "n,i,w1,w2," << value_key << '\n';
            for (const auto& [k, h] : table.entries)
                out << k.n << ',' << k.i << ',' << k.w1 << ',' << k.w2 << ','
                    << value_of(k, h).get_str() << '\n';
            return out.str();
        }
        case Format::text: {
            std::ostringstream out;
            out << "genus " << table.genus << ", punctures " << table.punctures
                << ", n <= " << tmax << "\n";
            out << "   n   i  w1  w2  " << value_key << '\n';
            for (const auto& [k, h] : table.entries) {
                out.width(4);
                out << k.n;
                out.width(4);
                out << k.i;
                out.width(4);
                out << k.w1;
                out.width(4);
                out << k.w2;
                out << "  " << value_of(k, h).get_str() << '\n';
            }
            return out.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string format_dim_table(const dg::GradedDimTable& table, int genus, int n,
                             Format f) {
    switch (f) {
        case Format::json: {
            ordered_json doc;
            doc["genus"] = genus;
            doc["n"] = n;
            auto& entries = doc["entries"] = ordered_json::array();
            for (const auto& [k, dim] : table.dims) {
                ordered_json e;
                e["p"] = k.p;
                e["q"] = k.q;
                e["w1"] = k.w1;
                e["w2"] = k.w2;
                e["dim"] = int_to_json(dim);
                entries.push_back(std::move(e));
            }
            return doc.dump() + "\n";
        }
        case Format::csv: {
            std::ostringstream out;
            out << "p,q,w1,w2,dim\n";
            for (const auto& [k, dim] : table.dims)
                out << k.p << ',' << k.q << ',' << k.w1 << ',' << k.w2 << ','
                    << dim.get_str() << '\n';
            return out.str();
        }
        case Format::text: {
            std::ostringstream out;
            out << "genus " << genus << ", n = " << n << "\n";
            out << "   p   q  w1  w2  dim\n";
            for (const auto& [k, dim] : table.dims) {
                out.width(4);
                out << k.p;
                out.width(4);
                out << k.q;
                out.width(4);
                out << k.w1;
                out.width(4);
                out << k.w2;
                out << "  " << dim.get_str() << '\n';
            }
            return out.str();
        }
    }
    throw std::logic_error("unreachable");
}

ordered_json report_to_json(const verify::CheckReport& r) {
    ordered_json doc;
    doc["suite"] = r.suite;
    doc["params"] = r.params;
    doc["pass"] = r.pass;
    if (r.witness) {
        ordered_json w;
        w["location"] = r.witness->location;
        w["expected"] = r.witness->expected;
        w["actual"] = r.witness->actual;
        doc["witness"] = std::move(w);
    } else {
        doc["witness"] = nullptr;
    }
    doc["notes"] = r.notes;
    return doc;
}

std::string format_reports(const std::vector<verify::CheckReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump() + "\n";
}

}  // namespace confhodge::io
