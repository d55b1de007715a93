#pragma once

// Arrowed Gauss codes: per-component cyclic event sequences.  An event is a
// crossing half (over/under, signed) or an arrow (along/against traversal).
// Semi-arcs are the gaps between events; a component with k >= 1 events has
// k semi-arcs, an event-free component has exactly one.

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace biq {

enum class EventKind { Under, Over, Arrow };

struct Event {
    EventKind kind;
    int crossing = 0;  // crossing halves only
    int sign = 0;      // +1/-1, crossing halves only
    int dir = 0;       // +1 along / -1 against, arrows only

    static Event under(int c, int s) { return {EventKind::Under, c, s, 0}; }
    static Event over(int c, int s) { return {EventKind::Over, c, s, 0}; }
    static Event arrow(int d) { return {EventKind::Arrow, 0, 0, d}; }

    bool is_half() const { return kind != EventKind::Arrow; }
    bool operator==(const Event& o) const {
        return kind == o.kind && crossing == o.crossing && sign == o.sign && dir == o.dir;
    }
};

struct ArrowedDiagram {
    std::vector<std::vector<Event>> comps;

    bool operator==(const ArrowedDiagram& o) const { return comps == o.comps; }
};

// Identifies the gap after event `pos` of component `comp` (cyclically);
// for an event-free component the single arc is (comp, 0).
struct SemiArc {
    int comp;
    int pos;
    bool operator<(const SemiArc& o) const {
        return comp != o.comp ? comp < o.comp : pos < o.pos;
    }
    bool operator==(const SemiArc& o) const { return comp == o.comp && pos == o.pos; }
};

inline int semi_arc_count(const ArrowedDiagram& D) {
    int k = 0;
    for (const auto& c : D.comps) k += c.empty() ? 1 : static_cast<int>(c.size());
    return k;
}

inline std::vector<SemiArc> semi_arcs(const ArrowedDiagram& D) {
    std::vector<SemiArc> out;
    for (int ci = 0; ci < static_cast<int>(D.comps.size()); ++ci) {
        int m = D.comps[ci].empty() ? 1 : static_cast<int>(D.comps[ci].size());
        for (int j = 0; j < m; ++j) out.push_back({ci, j});
    }
    return out;
}

inline std::vector<std::string> validate(const ArrowedDiagram& D) {
    std::vector<std::string> errs;
    std::map<int, std::vector<std::pair<int, int>>> halves;  // id -> (role flag, sign)
    for (const auto& comp : D.comps)
        for (const auto& ev : comp)
            if (ev.is_half()) {
                if (ev.sign != 1 && ev.sign != -1)
                    errs.push_back("crossing " + std::to_string(ev.crossing) + ": bad sign");
                halves[ev.crossing].push_back({ev.kind == EventKind::Over ? 1 : 0, ev.sign});
            } else if (ev.dir != 1 && ev.dir != -1) {
                errs.push_back("arrow with bad direction");
            }
    for (auto& [id, hs] : halves) {
        if (hs.size() != 2) {
            errs.push_back("crossing " + std::to_string(id) + ": occurs " +
                           std::to_string(hs.size()) + " time(s), expected 2");
            continue;
        }
        if (hs[0].first == hs[1].first)
            errs.push_back("crossing " + std::to_string(id) + ": duplicate " +
                           (hs[0].first ? std::string("over") : std::string("under")) + " role");
        if (hs[0].second != hs[1].second)
            errs.push_back("crossing " + std::to_string(id) + ": sign mismatch");
    }
    return errs;
}

// Sign of each crossing, keyed by crossing id.
inline std::map<int, int> crossing_signs(const ArrowedDiagram& D) {
    std::map<int, int> s;
    for (const auto& comp : D.comps)
        for (const auto& ev : comp)
            if (ev.kind == EventKind::Under) s[ev.crossing] = ev.sign;
    return s;
}

inline int writhe(const ArrowedDiagram& D) {
    int w = 0;
    for (const auto& comp : D.comps)
        for (const auto& ev : comp)
            if (ev.kind == EventKind::Under) w += ev.sign;
    return w;
}

inline int winding(const ArrowedDiagram& D, int comp) {
    int h = 0;
    for (const auto& ev : D.comps[comp])
        if (ev.kind == EventKind::Arrow) h += ev.dir;
    return h;
}

inline int total_winding(const ArrowedDiagram& D) {
    int h = 0;
    for (int ci = 0; ci < static_cast<int>(D.comps.size()); ++ci) h += winding(D, ci);
    return h;
}

// Renumbers crossings 1..m in first-traversal order (component order, then
// event order).  Two diagrams are equal up to crossing-id renaming iff their
// canonical forms compare equal.
inline ArrowedDiagram canonical_renumbering(const ArrowedDiagram& D) {
    std::map<int, int> ren;
    ArrowedDiagram out = D;
    int next = 1;
    for (auto& comp : out.comps)
        for (auto& ev : comp)
            if (ev.is_half()) {
                auto it = ren.find(ev.crossing);
                if (it == ren.end()) it = ren.emplace(ev.crossing, next++).first;
                ev.crossing = it->second;
            }
    return out;
}

inline bool equal_up_to_renaming(const ArrowedDiagram& A, const ArrowedDiagram& B) {
    return canonical_renumbering(A) == canonical_renumbering(B);
}

// Text format: components separated by ';', events by ','.  Tokens: oK+/oK-
// (over half of crossing K), uK+/uK-, a+/a- (arrow along/against).  A bare
// '0' denotes an event-free component.  Whitespace is ignored.
inline ArrowedDiagram parse_diagram(const std::string& text) {
    ArrowedDiagram D;
    std::string clean;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) clean += ch;
    if (clean.empty()) throw std::runtime_error("diagram: empty input (use '0' for the event-free circle)");
    std::istringstream comps_in(clean);
    std::string comp_str;
    while (std::getline(comps_in, comp_str, ';')) {
        std::vector<Event> comp;
        if (comp_str != "0" && !comp_str.empty()) {
            std::istringstream ev_in(comp_str);
            std::string tok;
            while (std::getline(ev_in, tok, ',')) {
                if (tok.empty()) throw std::runtime_error("diagram: empty event token");
                if (tok == "a+") { comp.push_back(Event::arrow(+1)); continue; }
                if (tok == "a-") { comp.push_back(Event::arrow(-1)); continue; }
                char role = tok[0];
                char sg = tok.back();
                if ((role != 'o' && role != 'u') || (sg != '+' && sg != '-') || tok.size() < 3)
                    throw std::runtime_error("diagram: bad event token '" + tok + "'");
                int id;
                try {
                    size_t used = 0;
                    id = std::stoi(tok.substr(1, tok.size() - 2), &used);
                    if (used != tok.size() - 2) throw std::invalid_argument("");
                } catch (...) {
                    throw std::runtime_error("diagram: bad crossing id in '" + tok + "'");
                }
                int s = (sg == '+') ? 1 : -1;
                comp.push_back(role == 'o' ? Event::over(id, s) : Event::under(id, s));
            }
        } else if (comp_str.empty()) {
            throw std::runtime_error("diagram: empty component (use '0')");
        }
        D.comps.push_back(std::move(comp));
    }
    return D;
}

inline std::string serialize_diagram(const ArrowedDiagram& D) {
    ArrowedDiagram C = canonical_renumbering(D);
    std::string out;
    for (size_t ci = 0; ci < C.comps.size(); ++ci) {
        if (ci) out += ";";
        if (C.comps[ci].empty()) { out += "0"; continue; }
        for (size_t j = 0; j < C.comps[ci].size(); ++j) {
            if (j) out += ",";
            const Event& ev = C.comps[ci][j];
            if (ev.kind == EventKind::Arrow) out += (ev.dir > 0 ? "a+" : "a-");
            else
                out += std::string(ev.kind == EventKind::Over ? "o" : "u") +
                       std::to_string(ev.crossing) + (ev.sign > 0 ? "+" : "-");
        }
    }
    return out;
}

}  // namespace biq
