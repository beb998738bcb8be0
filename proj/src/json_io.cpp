#include "lamina/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lamina {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::io, "malformed JSON input");
    return j;
}

std::string fixed9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

} // namespace

std::string major_to_json(const PrimitiveMajor& major) {
    PrimitiveMajor m = canonical_major(major.degree, major.classes);
    json classes = json::array();
    for (const auto& c : m.classes) {
        json cls = json::array();
        for (const auto& a : c.angles) cls.push_back(a.str());
        classes.push_back(cls);
    }
    return json{{"degree", m.degree}, {"classes", classes}}.dump(2) + "\n";
}

PrimitiveMajor major_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("degree") || !j.contains("classes"))
        fail(errc::io, "major JSON needs 'degree' and 'classes'");
    std::vector<EquivalenceClass> classes;
    for (const auto& cls : j.at("classes")) {
        EquivalenceClass c;
        for (const auto& s : cls) c.angles.push_back(angle_from_string(s.get<std::string>()));
        classes.push_back(std::move(c));
    }
    return canonical_major(j.at("degree").get<int>(), std::move(classes));
}

std::string lamination_to_json(const FiniteLamination& lam) {
    json leaves = json::array();
    for (const auto& l : lam.leaves) leaves.push_back(json::array({l.a.str(), l.b.str()}));
    return json{{"degree", lam.degree}, {"leaves", leaves}}.dump(2) + "\n";
}

FiniteLamination lamination_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("degree") || !j.contains("leaves"))
        fail(errc::io, "lamination JSON needs 'degree' and 'leaves'");
    FiniteLamination lam;
    lam.degree = j.at("degree").get<int>();
    for (const auto& pair : j.at("leaves")) {
        if (pair.size() != 2) fail(errc::io, "a leaf needs exactly two angles");
        lam.leaves.insert(Leaf(angle_from_string(pair[0].get<std::string>()),
                               angle_from_string(pair[1].get<std::string>())));
    }
    return lam;
}

std::string rectangles_to_json(const RectangleSet& r) {
    json rects = json::array();
    for (const auto& rect : r.rects())
        rects.push_back(json::array(
            {json::array({rat_to_string(rect.x.lo), rat_to_string(rect.x.hi)}),
             json::array({rat_to_string(rect.y.lo), rat_to_string(rect.y.hi)})}));
    return json{{"rectangles", rects}, {"area", rat_to_string(r.area())}}.dump(2) + "\n";
}

RectangleSet rectangles_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("rectangles"))
        fail(errc::io, "rectangle JSON needs 'rectangles'");
    std::vector<TorusRect> rects;
    for (const auto& r : j.at("rectangles")) {
        if (r.size() != 2 || r[0].size() != 2 || r[1].size() != 2)
            fail(errc::io, "a rectangle is [[x0,x1],[y0,y1]]");
        rects.push_back({{rat_from_string(r[0][0].get<std::string>()),
                          rat_from_string(r[0][1].get<std::string>())},
                         {rat_from_string(r[1][0].get<std::string>()),
                          rat_from_string(r[1][1].get<std::string>())}});
    }
    return RectangleSet(std::move(rects));
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "theta_num,theta_den,rho,entropy,dimension\n";
    for (const auto& r : rows)
        out << r.theta.numerator().str() << "," << r.theta.denominator().str() << ","
            << fixed9(r.rho) << "," << fixed9(r.entropy) << "," << fixed9(r.dimension) << "\n";
    return out.str();
}

std::vector<SweepRow> sweep_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("theta_num", 0) != 0)
        fail(errc::io, "missing sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string num, den, rho, ent, dim;
        if (!std::getline(ls, num, ',') || !std::getline(ls, den, ',') ||
            !std::getline(ls, rho, ',') || !std::getline(ls, ent, ',') || !std::getline(ls, dim))
            fail(errc::io, "short sweep CSV row: " + line);
        SweepRow row;
        row.theta = Angle(Int(num), Int(den));
        row.rho = std::stod(rho);
        row.entropy = std::stod(ent);
        row.dimension = std::stod(dim);
        rows.push_back(row);
    }
    return rows;
}

std::string read_text_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io, "cannot write '" + path + "'");
    out << text;
}

} // namespace lamina
