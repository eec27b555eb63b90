#ifndef SPSLAB_IO_HPP
#define SPSLAB_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "spslab/depth4.hpp"
#include "spslab/pit.hpp"
#include "spslab/sps_expr.hpp"

namespace spslab {

// On-disk instances are either sum-of-products expressions or depth-4
// formulas, tagged by "kind". All big numbers travel as canonical
// decimal strings so no reader ever pushes them through a double.
struct Instance {
    std::variant<SpsExpr, Depth4Formula> payload;

    bool is_sps() const { return std::holds_alternative<SpsExpr>(payload); }
    const SpsExpr& sps() const { return std::get<SpsExpr>(payload); }
    const Depth4Formula& depth4() const { return std::get<Depth4Formula>(payload); }
};

Instance parse_instance(const std::string& text, const std::string& origin = "<input>");
Instance load_instance(const std::string& path);

// Canonical bytes: fixed key order, 2-space indent, sorted canonical
// terms, trailing newline. parse -> serialize is the identity on
// canonical files.
std::string serialize_instance(const SpsExpr& e);
std::string serialize_instance(const Depth4Formula& f);
std::string serialize_instance(const Instance& inst);

nlohmann::ordered_json verdict_to_json(const PitVerdict& v);

} // namespace spslab

#endif
