#pragma once

// Line-oriented text format for monodromy tuples, designed so commands can be
// piped: a header line "tuple", key lines (name/note optional, conductor,
// rank, points), then one labeled block per point whose rows are
// comma-separated expressions in z = zeta_conductor.  '#' starts a comment
// anywhere on a line.  Finite points are labeled 1..n-1; the last point is
// labeled "inf".  Conductors congruent to 2 mod 4 are folded to their odd
// half, the canonical representative of the same field.

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cym/expr.hpp"
#include "cym/katz.hpp"
#include "cym/tuple.hpp"

namespace cym {

struct TupleDocument {
    std::string name;  // optional
    std::string note;  // optional free-form annotation
    unsigned long conductor = 1;
    MonodromyTuple tuple;

    bool operator==(const TupleDocument& o) const {
        return name == o.name && note == o.note && conductor == o.conductor &&
               tuple.rank == o.tuple.rank && tuple.mats == o.tuple.mats;
    }
};

namespace doc_detail {

inline std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_cells(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

inline void check_inline_text(const std::string& v, const char* what) {
    if (v.find('\n') != std::string::npos || v.find('#') != std::string::npos)
        throw std::invalid_argument(std::string(what) +
                                    " may not contain '#' or line breaks");
}

[[noreturn]] inline void fail(std::size_t lineno, const std::string& what) {
    throw std::invalid_argument("document line " + std::to_string(lineno) + ": " +
                                what);
}

}  // namespace doc_detail

inline TupleDocument make_document(const MonodromyTuple& t, std::string name = "",
                                   std::string note = "") {
    TupleDocument d;
    d.name = std::move(name);
    d.note = std::move(note);
    d.tuple = t;
    unsigned long m = 1;
    for (const auto& a : t.mats)
        for (unsigned long i = 0; i < a.rows(); ++i)
            for (unsigned long j = 0; j < a.cols(); ++j)
                m = std::lcm(m, a(i, j).conductor());
    d.conductor = normalize_conductor(m);
    return d;
}

inline std::string format_document(const TupleDocument& d) {
    doc_detail::check_inline_text(d.name, "name");
    doc_detail::check_inline_text(d.note, "note");
    if (d.tuple.mats.empty())
        throw std::invalid_argument("format_document: tuple has no points");
    std::ostringstream os;
    os << "tuple\n";
    if (!d.name.empty()) os << "name " << d.name << "\n";
    if (!d.note.empty()) os << "note " << d.note << "\n";
    os << "conductor " << normalize_conductor(d.conductor) << "\n";
    os << "rank " << d.tuple.rank << "\n";
    os << "points " << d.tuple.points() << "\n";
    for (std::size_t p = 0; p < d.tuple.mats.size(); ++p) {
        os << "point "
           << (p + 1 == d.tuple.mats.size() ? std::string("inf")
                                            : std::to_string(p + 1))
           << "\n";
        const Matrix& a = d.tuple.mats[p];
        for (unsigned long i = 0; i < a.rows(); ++i) {
            for (unsigned long j = 0; j < a.cols(); ++j) {
                if (j) os << ", ";
                os << format_at(a(i, j), d.conductor);
            }
            os << "\n";
        }
    }
    return os.str();
}

inline TupleDocument parse_document(const std::string& text) {
    using doc_detail::fail;
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::istringstream is(text);
        std::string raw;
        std::size_t no = 0;
        while (std::getline(is, raw)) {
            ++no;
            std::string s = doc_detail::strip(raw);
            if (!s.empty()) lines.emplace_back(no, std::move(s));
        }
    }
    std::size_t pos = 0;
    auto next = [&]() -> const std::pair<std::size_t, std::string>& {
        if (pos >= lines.size())
            throw std::invalid_argument("document ends before the tuple is complete");
        return lines[pos++];
    };

    {
        const auto& [no, s] = next();
        if (s != "tuple") fail(no, "expected the header 'tuple'");
    }

    TupleDocument d;
    bool have_conductor = false, have_rank = false;
    unsigned long points = 0;
    bool have_points = false;
    auto read_uint = [&](const std::string& s, std::size_t no) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(s, &used);
            if (used != s.size()) fail(no, "trailing characters after number");
            return v;
        } catch (const std::invalid_argument&) {
            fail(no, "expected a number");
        } catch (const std::out_of_range&) {
            fail(no, "number out of range");
        }
    };

    while (pos < lines.size()) {
        const auto& [no, s] = lines[pos];
        const auto space = s.find(' ');
        const std::string key = s.substr(0, space);
        const std::string rest =
            space == std::string::npos ? "" : doc_detail::strip(s.substr(space + 1));
        if (key == "point") break;
        ++pos;
        if (key == "name")
            d.name = rest;
        else if (key == "note")
            d.note = rest;
        else if (key == "conductor") {
            const unsigned long v = read_uint(rest, no);
            if (v == 0) fail(no, "conductor must be positive");
            d.conductor = normalize_conductor(v);
            have_conductor = true;
        } else if (key == "rank") {
            d.tuple.rank = read_uint(rest, no);
            if (d.tuple.rank == 0) fail(no, "rank must be positive");
            have_rank = true;
        } else if (key == "points") {
            points = read_uint(rest, no);
            if (points == 0) fail(no, "a tuple needs at least one point");
            have_points = true;
        } else
            fail(no, "unknown key '" + key + "'");
    }
    if (!have_conductor || !have_rank || !have_points)
        throw std::invalid_argument(
            "document needs conductor, rank, and points before the matrices");

    for (unsigned long p = 0; p < points; ++p) {
        const auto& [no, s] = next();
        const std::string expected =
            p + 1 == points ? std::string("inf") : std::to_string(p + 1);
        if (s != "point " + expected)
            fail(no, "expected 'point " + expected + "'");
        Matrix a(d.tuple.rank, d.tuple.rank);
        for (unsigned long i = 0; i < d.tuple.rank; ++i) {
            const auto& [rno, row] = next();
            const auto cells = doc_detail::split_cells(row);
            if (cells.size() != d.tuple.rank)
                fail(rno, "expected " + std::to_string(d.tuple.rank) +
                              " entries in the row");
            for (unsigned long j = 0; j < d.tuple.rank; ++j) {
                try {
                    a(i, j) = parse_cyclotomic(cells[j], d.conductor);
                } catch (const std::invalid_argument& e) {
                    fail(rno, std::string("entry ") + std::to_string(j + 1) + ": " +
                                  e.what());
                }
            }
        }
        d.tuple.mats.push_back(std::move(a));
    }
    if (pos != lines.size()) fail(lines[pos].first, "unexpected content after the tuple");

    const TupleCheck check = validate_tuple(d.tuple);
    if (!check.ok())
        throw std::invalid_argument("document is not a monodromy tuple: " +
                                    check.violations.front());
    return d;
}

// A contraction run rendered as one archival record: the parameter, the
// rotation offset, both twist vectors, and the input/output tuples.  Together
// these determine the inverse pass exactly.
inline std::string format_katz_run(const KatzRun& run, const std::string& name = "") {
    unsigned long m = normalize_conductor(run.nu.order);
    const TupleDocument in =
        make_document(run.input, name.empty() ? "" : name + "-input");
    const TupleDocument out =
        make_document(run.forward.output, name.empty() ? "" : name + "-contracted");
    for (const auto& f : run.scalar_kill.factors.scalars)
        m = std::lcm(m, f.conductor());
    for (const auto& f : run.eigenvalue_shift.factors.scalars)
        m = std::lcm(m, f.conductor());
    m = normalize_conductor(std::lcm(m, std::lcm(in.conductor, out.conductor)));

    std::ostringstream os;
    os << "katzrun\n";
    os << "conductor " << m << "\n";
    os << "nu " << format_at(run.nu.value(), m) << "\n";
    os << "rotation " << run.rotation.offset << "\n";
    auto twist_line = [&](const char* label, const RankOneTwist& tw) {
        os << label;
        for (std::size_t i = 0; i < tw.scalars.size(); ++i)
            os << (i ? ", " : " ") << format_at(tw.scalars[i], m);
        os << "\n";
    };
    twist_line("twist1", run.scalar_kill.factors);
    twist_line("twist2", run.eigenvalue_shift.factors);
    os << "input\n" << format_document(in);
    os << "output\n" << format_document(out);
    return os.str();
}

}  // namespace cym
