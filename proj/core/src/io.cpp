#include "hsurf/io.hpp"

#include <fstream>
#include <sstream>

#include "hsurf/parse.hpp"

namespace hsurf {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return line;
    }
    throw ParseError("unexpected end of fixture", 0, 0);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

std::vector<size_t> parse_block_list(const std::string& s) {
    std::vector<size_t> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoul(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoul(cur));
    return out;
}

Chart parse_chart_word(const std::string& w) {
    if (w == "affine") return Chart::Affine;
    if (w == "projective") return Chart::Projective;
    throw ParseError("expected 'affine' or 'projective', got '" + w + "'", 0, 0);
}

std::string blocks_suffix(const char* label, const std::vector<size_t>& blocks) {
    if (blocks.size() <= 1) return "";
    std::string s = std::string(" ") + label + " ";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(blocks[i]);
    }
    return s;
}

} // namespace

Hypersurface read_hypersurface(std::istream& in) {
    FieldSpec field = FieldSpec::parse(next_content_line(in));
    auto words = split_ws(next_content_line(in));
    bool ambient = false;
    size_t w = 0;
    if (!words.empty() && words[0] == "ambient") {
        ambient = true;
        ++w;
    }
    if (words.size() != w + 2) throw ParseError("chart line must be '[ambient] <chart> <nvars>'", 0, 0);
    Chart chart = parse_chart_word(words[w]);
    size_t nvars = std::stoul(words[w + 1]);
    if (ambient) return Hypersurface::ambient_space(chart, field, nvars);
    Polynomial h = parse_polynomial(next_content_line(in), nvars, field);
    return chart == Chart::Affine ? Hypersurface::affine(std::move(h))
                                  : Hypersurface::projective(std::move(h));
}

Hypersurface read_hypersurface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open hypersurface fixture '" + path + "'", 0, 0);
    return read_hypersurface(in);
}

void write_hypersurface(std::ostream& os, const Hypersurface& X) {
    os << X.field().to_string() << "\n";
    if (X.is_ambient_space()) {
        os << "ambient " << chart_name(X.chart()) << " " << X.nvars() << "\n";
        return;
    }
    os << chart_name(X.chart()) << " " << X.nvars() << "\n";
    os << X.defining().to_string() << "\n";
}

RationalMap read_map(std::istream& in) {
    FieldSpec field = FieldSpec::parse(next_content_line(in));
    auto words = split_ws(next_content_line(in));
    // map <chart> <nvars> -> <chart> <ncoords> [source-blocks l1,..] [target-blocks l1,..]
    if (words.size() < 6 || words[0] != "map" || words[3] != "->")
        throw ParseError("map header must be 'map <chart> <nvars> -> <chart> <ncoords>'", 0, 0);
    Chart source_chart = parse_chart_word(words[1]);
    size_t source_vars = std::stoul(words[2]);
    Chart target_chart = parse_chart_word(words[4]);
    size_t ncoords = std::stoul(words[5]);
    std::vector<size_t> sblocks, tblocks;
    for (size_t i = 6; i + 1 < words.size(); i += 2) {
        if (words[i] == "source-blocks") sblocks = parse_block_list(words[i + 1]);
        else if (words[i] == "target-blocks") tblocks = parse_block_list(words[i + 1]);
        else throw ParseError("unknown map header option '" + words[i] + "'", 0, 0);
    }

    std::vector<RationalFunction> coords;
    for (size_t i = 0; i < ncoords; ++i) {
        auto [num, den] = parse_fraction(next_content_line(in), source_vars, field);
        coords.emplace_back(std::move(num), std::move(den));
    }
    return normalize(std::move(coords), source_chart, target_chart, std::move(sblocks), std::move(tblocks));
}

RationalMap read_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map fixture '" + path + "'", 0, 0);
    return read_map(in);
}

void write_map(std::ostream& os, const RationalMap& F) {
    os << F.field().to_string() << "\n";
    os << "map " << chart_name(F.source_chart()) << " " << F.source_vars() << " -> "
       << chart_name(F.target_chart()) << " " << F.target_coords()
       << blocks_suffix("source-blocks", F.source_blocks())
       << blocks_suffix("target-blocks", F.target_blocks()) << "\n";
    if (F.target_chart() == Chart::Affine) {
        for (const auto& c : F.affine_coords()) os << c.to_string() << "\n";
    } else {
        for (const auto& p : F.form()) os << p.to_string() << "\n";
    }
}

Point parse_point(const std::string& text, FieldSpec field) {
    bool projective = text.find(':') != std::string::npos;
    char sep = projective ? ':' : ',';
    std::vector<FieldElement> coords;
    std::string cur;
    auto flush = [&]() {
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty point coordinate", 0, 0);
        coords.push_back(FieldElement::from_string(field, cur.substr(a, b - a + 1)));
        cur.clear();
    };
    for (char c : text) {
        if (c == sep)
            flush();
        else
            cur += c;
    }
    flush();
    return projective ? Point::projective(std::move(coords)) : Point::affine(std::move(coords));
}

} // namespace hsurf
