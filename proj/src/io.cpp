#include "halin/io.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "halin/verify.hpp"

namespace halin {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string field;
    while (in >> field) out.push_back(field);
    return out;
}

long long parse_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw SyntaxError(line, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw SyntaxError(line, "expected integer, got '" + s + "'");
    } catch (const std::out_of_range&) {
        throw SyntaxError(line, "integer out of range '" + s + "'");
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    Graph g;
    bool have_header = false;
    long long n = 0, m = 0, edges_read = 0;
    std::vector<std::pair<int, std::string>> labels;

    for (int idx = 0; idx < static_cast<int>(lines.size()); ++idx) {
        const int lineno = idx + 1;
        const std::string& raw = lines[idx];
        auto fields = split_fields(raw);
        if (fields.empty()) continue;
        if (fields[0][0] == '#') {
            if (fields.size() >= 3 && fields[0] == "#" && fields[1] == "label") {
                if (!have_header) throw SyntaxError(lineno, "label before header");
                long long id = parse_int(fields[2], lineno);
                if (id < 0 || id >= n) throw IdOutOfRangeError(lineno, "label id out of range");
                std::string name;
                for (std::size_t f = 3; f < fields.size(); ++f) {
                    if (!name.empty()) name += ' ';
                    name += fields[f];
                }
                labels.emplace_back(static_cast<int>(id), name);
            }
            continue;
        }
        if (!have_header) {
            if (fields.size() != 2) throw SyntaxError(lineno, "header must be 'n m'");
            n = parse_int(fields[0], lineno);
            m = parse_int(fields[1], lineno);
            if (n < 0 || m < 0) throw SyntaxError(lineno, "negative counts in header");
            g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (edges_read == m) throw SyntaxError(lineno, "more edge lines than the header announced");
        if (fields.size() != 2) throw SyntaxError(lineno, "edge line must be 'u v'");
        long long u = parse_int(fields[0], lineno);
        long long v = parse_int(fields[1], lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IdOutOfRangeError(lineno, "edge endpoint out of range");
        if (u == v) throw SyntaxError(lineno, "self-loop");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw DuplicateEdgeError(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++edges_read;
    }
    if (!have_header) throw SyntaxError(static_cast<int>(lines.size()) + 1, "missing header");
    if (edges_read != m)
        throw SyntaxError(static_cast<int>(lines.size()) + 1, "fewer edge lines than the header announced");
    for (auto& [id, name] : labels) g.set_label(id, name);
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.size() << ' ' << edges.size() << '\n';
    if (g.has_labels())
        for (int v = 0; v < g.size(); ++v)
            out << "# label " << v << ' ' << g.label(v) << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

const char* kDocMagic = "halin-rep 1";

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '&') out += "&amp;";
        else if (ch == '<') out += "&lt;";
        else if (ch == '>') out += "&gt;";
        else out.push_back(ch);
    }
    return out;
}

void emit_shape_line(std::ostringstream& out, int v, const Shape& s) {
    out << "shape " << v << ' ';
    if (const auto* l = std::get_if<LShape>(&s)) {
        out << "L " << format_rat(l->x_lo) << ' ' << format_rat(l->x_hi) << ' '
            << format_rat(l->y_lo) << ' ' << format_rat(l->y_hi);
    } else if (const auto* c = std::get_if<CShape>(&s)) {
        out << "C " << format_rat(c->spine_x) << ' ' << format_rat(c->bottom_x) << ' '
            << format_rat(c->top_x) << ' ' << format_rat(c->y_lo) << ' ' << format_rat(c->y_hi);
    } else if (const auto* sh = std::get_if<SShape>(&s)) {
        out << "S " << format_rat(sh->x_lo) << ' ' << format_rat(sh->x_mid) << ' '
            << format_rat(sh->x_hi) << ' ' << format_rat(sh->y_lo) << ' '
            << format_rat(sh->y_hi);
    } else {
        const auto& p = std::get<OrthoPath>(s);
        out << "P " << p.points.size();
        for (const auto& pt : p.points)
            out << ' ' << format_rat(pt.x) << ' ' << format_rat(pt.y);
    }
    out << '\n';
}

}  // namespace

std::string emit_document(const RepresentationDocument& doc) {
    std::ostringstream out;
    out << kDocMagic << '\n';
    out << "kind " << kind_tag(doc.rep.kind) << '\n';
    out << "scale " << doc.rep.scale_den << '\n';
    out << "n " << doc.rep.shapes.size() << '\n';
    out << "root " << doc.provenance.root << '\n';
    out << "base-index " << doc.provenance.base_index << '\n';
    out << "order";
    for (int v : doc.provenance.order) out << ' ' << v;
    out << '\n';
    for (const auto& [v, s] : doc.rep.shapes) emit_shape_line(out, v, s);
    out << "end\n";
    return out.str();
}

RepresentationDocument parse_document(const std::string& text) {
    auto lines = split_lines(text);
    RepresentationDocument doc;
    std::size_t idx = 0;

    auto next_fields = [&](const char* what) {
        while (idx < lines.size() && split_fields(lines[idx]).empty()) ++idx;
        if (idx >= lines.size())
            throw SyntaxError(static_cast<int>(lines.size()) + 1,
                              std::string("unexpected end of document, wanted ") + what);
        auto fields = split_fields(lines[idx]);
        ++idx;
        return fields;
    };
    auto expect_key = [&](const char* key) {
        auto fields = next_fields(key);
        if (fields[0] != key)
            throw SyntaxError(static_cast<int>(idx), std::string("expected '") + key + "' line");
        return fields;
    };

    {
        auto fields = next_fields("magic");
        if (fields.size() != 2 || fields[0] + " " + fields[1] != kDocMagic)
            throw SyntaxError(static_cast<int>(idx), "not a representation document");
    }
    long long n = 0;
    {
        auto fields = expect_key("kind");
        if (fields.size() != 2) throw SyntaxError(static_cast<int>(idx), "kind needs one tag");
        try {
            doc.rep.kind = kind_from_tag(fields[1]);
        } catch (const Error& e) {
            throw SyntaxError(static_cast<int>(idx), e.what());
        }
        fields = expect_key("scale");
        if (fields.size() != 2) throw SyntaxError(static_cast<int>(idx), "scale needs one value");
        doc.rep.scale_den = parse_int(fields[1], static_cast<int>(idx));
        if (doc.rep.scale_den <= 0) throw SyntaxError(static_cast<int>(idx), "scale must be positive");
        fields = expect_key("n");
        if (fields.size() != 2) throw SyntaxError(static_cast<int>(idx), "n needs one value");
        n = parse_int(fields[1], static_cast<int>(idx));
        fields = expect_key("root");
        if (fields.size() != 2) throw SyntaxError(static_cast<int>(idx), "root needs one value");
        doc.provenance.root = static_cast<int>(parse_int(fields[1], static_cast<int>(idx)));
        fields = expect_key("base-index");
        if (fields.size() != 2) throw SyntaxError(static_cast<int>(idx), "base-index needs one value");
        doc.provenance.base_index = static_cast<int>(parse_int(fields[1], static_cast<int>(idx)));
        fields = expect_key("order");
        for (std::size_t f = 1; f < fields.size(); ++f)
            doc.provenance.order.push_back(
                static_cast<int>(parse_int(fields[f], static_cast<int>(idx))));
    }

    for (long long seen = 0; seen < n; ++seen) {
        auto fields = expect_key("shape");
        const int lineno = static_cast<int>(idx);
        if (fields.size() < 3) throw SyntaxError(lineno, "shape line too short");
        int v = static_cast<int>(parse_int(fields[1], lineno));
        const std::string& type = fields[2];
        auto coord = [&](std::size_t f) {
            if (f >= fields.size()) throw SyntaxError(lineno, "missing coordinate");
            return parse_rat(fields[f], lineno);
        };
        Shape shape;
        if (type == "L" && fields.size() == 7) {
            shape = LShape{coord(3), coord(4), coord(5), coord(6)};
        } else if (type == "C" && fields.size() == 8) {
            shape = CShape{coord(3), coord(4), coord(5), coord(6), coord(7)};
        } else if (type == "S" && fields.size() == 8) {
            shape = SShape{coord(3), coord(4), coord(5), coord(6), coord(7)};
        } else if (type == "P") {
            long long count = parse_int(fields[3], lineno);
            if (count < 2 || fields.size() != 4 + 2 * static_cast<std::size_t>(count))
                throw SyntaxError(lineno, "bad point count in path record");
            OrthoPath p;
            for (long long j = 0; j < count; ++j)
                p.points.push_back({coord(4 + 2 * j), coord(5 + 2 * j)});
            shape = std::move(p);
        } else {
            throw SyntaxError(lineno, "unknown shape record '" + type + "'");
        }
        if (!doc.rep.shapes.emplace(v, std::move(shape)).second)
            throw SyntaxError(lineno, "repeated shape for vertex " + std::to_string(v));
    }
    {
        auto fields = expect_key("end");
        (void)fields;
    }
    return doc;
}

Graph gen_halin(std::uint64_t seed, int internal_target, bool allow_degree_two) {
    if (internal_target < 1) throw Error("need at least one internal vertex");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

    const int internals = internal_target;
    // children[u] holds internal ids and, later, leaf ids >= internals,
    // in plane (left-to-right) order
    std::vector<std::vector<int>> children(internals);
    for (int u = 1; u < internals; ++u) {
        int parent = pick(u);
        auto& c = children[parent];
        c.insert(c.begin() + pick(c.size() + 1), u);
    }

    int next_leaf = internals;
    for (int u = 0; u < internals; ++u) {
        int min_children = (u == 0) ? (allow_degree_two ? 2 : 3) : (allow_degree_two ? 1 : 2);
        int want = std::max<int>(0, min_children - static_cast<int>(children[u].size()));
        if (allow_degree_two) {
            if (pick(3) == 0) want += 1 + pick(2);
        } else {
            want += pick(4);
            if (pick(8) == 0) want += 3 + pick(5);  // occasional leaf fan
        }
        for (int j = 0; j < want; ++j) {
            auto& c = children[u];
            c.insert(c.begin() + pick(c.size() + 1), next_leaf++);
        }
    }
    while (next_leaf - internals < 3) {
        auto& c = children[0];
        c.insert(c.begin() + pick(c.size() + 1), next_leaf++);
    }

    const int n = next_leaf;
    Graph g(n);
    for (int u = 0; u < internals; ++u)
        for (int c : children[u]) g.add_edge(u, c);

    // rim through the leaves in depth-first order
    std::vector<int> rim;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v >= internals) {
            rim.push_back(v);
            continue;
        }
        for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
    }
    for (std::size_t j = 0; j < rim.size(); ++j)
        g.add_edge(rim[j], rim[(j + 1) % rim.size()]);
    return g;
}

std::string emit_svg(const Representation& rep, const Graph& g) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (rep.shapes.empty()) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n";
        return out.str();
    }

    const std::int64_t ppu = 20 * rep.scale_den;
    auto px = [&](const Rat& r) {
        Rat scaled = r * ppu;
        if (scaled.denominator() != 1)
            throw Error("coordinate does not land on the pixel grid");
        return scaled.numerator();
    };

    std::vector<std::pair<int, OrthoPath>> paths;
    for (const auto& [v, s] : rep.shapes) paths.emplace_back(v, to_path(s));

    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& [v, p] : paths)
        for (const auto& pt : p.points) {
            std::int64_t x = px(pt.x), y = px(pt.y);
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            }
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    std::int64_t width = std::max<std::int64_t>(max_x - min_x, 1);
    std::int64_t height = std::max<std::int64_t>(max_y - min_y, 1);
    std::int64_t margin = std::max<std::int64_t>(std::max(width, height) / 20, 1);

    // svg y grows downward; flip around the bounding box
    auto sx = [&](std::int64_t x) { return x - min_x + margin; };
    auto sy = [&](std::int64_t y) { return max_y - y + margin; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << (width + 2 * margin)
        << ' ' << (height + 2 * margin) << "\">\n";
    std::int64_t stroke = std::max<std::int64_t>(ppu / 8, 1);
    std::int64_t font = std::max<std::int64_t>(ppu / 3, 4);

    int idx = 0;
    const int count = static_cast<int>(paths.size());
    for (const auto& [v, p] : paths) {
        int hue = (360 * idx) / std::max(count, 1);
        out << "  <polyline fill=\"none\" stroke=\"hsl(" << hue << ",70%,40%)\" stroke-width=\""
            << stroke << "\" points=\"";
        for (std::size_t j = 0; j < p.points.size(); ++j) {
            if (j) out << ' ';
            out << sx(px(p.points[j].x)) << ',' << sy(px(p.points[j].y));
        }
        out << "\"/>\n";
        const auto& anchor = p.points.size() > 2 ? p.points[1] : p.points[0];
        out << "  <text x=\"" << sx(px(anchor.x)) + stroke << "\" y=\""
            << sy(px(anchor.y)) - stroke << "\" font-size=\"" << font << "\">"
            << xml_escape(g.label(v)) << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace halin
