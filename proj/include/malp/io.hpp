#pragma once

/*
 * Line-oriented text formats shared by the command line tool and the tests.
 * '#' opens a comment, blank lines are skipped, all readers report failures
 * with the offending line number. Every writer output re-reads to an equal
 * in-memory value.
 *
 * Constant-coefficient form file (1-based strictly increasing indices):
 *     dim 6
 *     degree 3
 *     term 2 : 1 3 5
 *
 * Subspace pair file (two blocks, one rational vector per line):
 *     dim 4
 *     subspace
 *     vector 1 0 0 0
 *     vector 0 1 0 0
 *     subspace
 *     vector 0 0 1 0
 *     vector 0 0 0 1
 *
 * Chart document:
 *     chart x1 x2 x3 z p1 p2 p3
 *     oneform theta: (1) dz + (-1*p1) dx1 + ...
 *     form omega: (2) dx1^dx2^dx3 + (-1) dp1^dp2^dp3
 *     map pi2: zt <- x1*p1 + x2*p2 + x3*p3 - z; p1 <- p1; p2 <- p2; p3 <- p3
 *     form Omega2 via pi2: (-1) dzt^dp1^dp2^dp3
 *     frame1 X1: x1 <- 1; z <- p1
 *     frame2 P1: p1 <- 1
 *     constraint y1^2 + y2^2 + y3^2 - 1
 *     squared_coefficient
 *
 * A form term is an optional scalar factor (one multiplicative term of the
 * expression grammar; parenthesize sums and quotients) followed by a wedge of
 * coordinate differentials d<name> joined by '^'; terms are joined by '+' or
 * '-'. A form declared 'via' a named map lives on that map's target chart.
 * Map and frame lines assign expressions in the document chart's variables;
 * omitted frame components are zero. The chart line comes first; maps must
 * precede the forms that reference them.
 */

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "malp/chart.hpp"
#include "malp/exterior.hpp"
#include "malp/masystem.hpp"

namespace malp {

struct FileParseError : std::runtime_error {
    int line;
    FileParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

ExteriorForm read_exterior_form(std::istream& in);
ExteriorForm read_exterior_form_file(const std::string& path);
void write_exterior_form(std::ostream& out, const ExteriorForm& w);

std::pair<Subspace, Subspace> read_subspace_pair(std::istream& in);
std::pair<Subspace, Subspace> read_subspace_pair_file(const std::string& path);
void write_subspace_pair(std::ostream& out, const Subspace& a, const Subspace& b);

/* single form expression on a known chart, e.g. "dz - p1 dx1 - p2 dx2";
 * DiffForm::str() output parses back to the same value */
DiffForm parse_form_expr(const Chart& chart, const std::string& src);

struct SystemDocument {
    Chart chart;
    /* in declaration order; oneform entries are degree-checked on read */
    std::vector<std::pair<std::string, DiffForm>> forms;
    std::vector<std::pair<std::string, PointMap>> maps;
    std::vector<VecField> frame1, frame2;
    std::vector<Polynomial> constraints;
    bool squared_coefficient = false;

    const DiffForm* form(const std::string& name) const;
    const PointMap* map(const std::string& name) const;
};

SystemDocument read_system_document(std::istream& in);
SystemDocument read_system_file(const std::string& path);

/* requires forms named theta and omega; frames, constraints and the squared
 * flag carry over */
MASystem system_from_document(const SystemDocument& doc);
void write_system(std::ostream& out, const MASystem& sys);

}  // namespace malp
