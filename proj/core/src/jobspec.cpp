#include "flatk/jobspec.hpp"

#include <algorithm>
#include <set>

namespace flatk {

namespace {

// Collects human-readable violations while walking a spec document.
struct Checker {
    std::vector<std::string> violations;

    void fail(const std::string& msg) { violations.push_back(msg); }

    void finish() const {
        if (!violations.empty())
            throw SpecValidationError(violations);
    }

    bool require_long(const ordered_json& j, const std::string& key, long& out) {
        if (!j.contains(key)) {
            fail("missing field: " + key);
            return false;
        }
        if (!j[key].is_number_integer()) {
            fail("field " + key + " must be an integer");
            return false;
        }
        out = j[key].get<long>();
        return true;
    }

    bool optional_long(const ordered_json& j, const std::string& key, long& out) {
        if (!j.contains(key))
            return false;
        if (!j[key].is_number_integer()) {
            fail("field " + key + " must be an integer");
            return false;
        }
        out = j[key].get<long>();
        return true;
    }

    bool weight_array(const ordered_json& j, const std::string& where, int rank, Weight& out) {
        if (!j.is_array()) {
            fail(where + " must be an array of integers");
            return false;
        }
        Weight w;
        for (const auto& e : j) {
            if (!e.is_number_integer()) {
                fail(where + " must contain only integers");
                return false;
            }
            w.push_back(e.get<long>());
        }
        if (rank > 0 && static_cast<int>(w.size()) != rank) {
            fail(where + " must have " + std::to_string(rank) + " coordinates");
            return false;
        }
        out = std::move(w);
        return true;
    }

    bool dominant_weight(const ordered_json& j, const std::string& where, int rank, Weight& out) {
        if (!weight_array(j, where, rank, out))
            return false;
        for (long x : out)
            if (x < 0) {
                fail(where + " must be dominant (all coordinates >= 0)");
                return false;
            }
        return true;
    }

    void unknown_keys(const ordered_json& j, const std::set<std::string>& allowed) {
        for (auto it = j.begin(); it != j.end(); ++it)
            if (allowed.find(it.key()) == allowed.end())
                fail("unknown field: " + it.key());
    }
};

const RootDatum* parse_datum(Checker& ck, const ordered_json& spec) {
    if (!spec.contains("type")) {
        ck.fail("missing field: type");
        return nullptr;
    }
    if (!spec["type"].is_string()) {
        ck.fail("field type must be a string like \"A1\"");
        return nullptr;
    }
    try {
        return &datum_from_label(spec["type"].get<std::string>());
    } catch (const SpecError& e) {
        ck.fail(e.what());
        return nullptr;
    }
}

// Character described by a list of dominant highest weights (summed), each
// optionally wrapped as {"highest_weight": [...], "dual": bool}.
bool parse_character_entry(Checker& ck, const ordered_json& e, const std::string& where,
                           const RootDatum* d, Character& out) {
    Weight w;
    bool dual = false;
    if (e.is_object()) {
        if (!e.contains("highest_weight")) {
            ck.fail(where + " must carry highest_weight");
            return false;
        }
        if (e.contains("dual")) {
            if (!e["dual"].is_boolean()) {
                ck.fail(where + ".dual must be a boolean");
                return false;
            }
            dual = e["dual"].get<bool>();
        }
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it.key() != "highest_weight" && it.key() != "dual")
                ck.fail("unknown field: " + where + "." + it.key());
        if (!ck.dominant_weight(e["highest_weight"], where + ".highest_weight",
                                d ? d->rank : 0, w))
            return false;
    } else if (!ck.dominant_weight(e, where, d ? d->rank : 0, w)) {
        return false;
    }
    if (!d)
        return false;
    const Weight hw = dual ? d->dual_highest_weight(w) : w;
    out = cached_character(*d, hw);
    return true;
}

bool parse_character_sum(Checker& ck, const ordered_json& arr, const std::string& where,
                         const RootDatum* d, Character& out) {
    if (!arr.is_array()) {
        ck.fail(where + " must be an array");
        return false;
    }
    bool ok = true;
    std::size_t i = 0;
    for (const auto& e : arr) {
        Character c;
        if (parse_character_entry(ck, e, where + "[" + std::to_string(i) + "]", d, c)) {
            for (const auto& [w, m] : c.support())
                out.add(w, m);
        } else {
            ok = false;
        }
        ++i;
    }
    return ok;
}

}  // namespace

SpecValidationError::SpecValidationError(std::vector<std::string> violations)
    : SpecError(join(violations)), violations_(std::move(violations)) {}

std::string SpecValidationError::join(const std::vector<std::string>& v) {
    std::string out = "invalid job spec";
    for (const auto& s : v)
        out += "; " + s;
    return out;
}

const RootDatum& datum_from_label(const std::string& label) {
    if (label.size() < 2)
        throw UnsupportedType("type label must look like \"A1\"");
    const char family = label[0];
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (label[i] < '0' || label[i] > '9')
            throw UnsupportedType("type label must look like \"A1\"");
        rank = rank * 10 + (label[i] - '0');
    }
    return root_datum(family, rank);
}

IndexJob index_job_from_json(const ordered_json& spec) {
    Checker ck;
    if (!spec.is_object()) {
        ck.fail("job spec must be a JSON object");
        ck.finish();
    }
    ck.unknown_keys(spec, {"command", "type", "genus", "level", "order", "deformation",
                           "boundary", "point_insertion", "curve_insertion", "breakdown"});
    IndexJob job;
    job.datum = parse_datum(ck, spec);

    long genus = 0;
    if (ck.require_long(spec, "genus", genus)) {
        if (genus < 0)
            ck.fail("genus must be nonnegative");
        else
            job.genus = static_cast<int>(genus);
    }
    long level = 0;
    if (ck.require_long(spec, "level", level)) {
        job.level = level;
        if (job.datum && level + job.datum->dual_coxeter < 1)
            ck.fail("level must exceed minus the dual Coxeter number");
    }
    long order = 0;
    if (ck.optional_long(spec, "order", order)) {
        if (order < 0)
            ck.fail("order must be nonnegative");
        else
            job.order = static_cast<int>(order);
    }
    if (spec.contains("deformation"))
        parse_character_sum(ck, spec["deformation"], "deformation", job.datum, job.deformation);
    if (spec.contains("boundary")) {
        if (!spec["boundary"].is_array()) {
            ck.fail("boundary must be an array");
        } else {
            std::size_t i = 0;
            for (const auto& e : spec["boundary"]) {
                Character c;
                if (parse_character_entry(ck, e, "boundary[" + std::to_string(i) + "]", job.datum,
                                          c))
                    job.boundary.push_back(std::move(c));
                ++i;
            }
        }
    }
    if (job.boundary.empty() && job.datum)
        job.boundary.push_back(trivial_character(job.datum->rank));
    if (spec.contains("point_insertion")) {
        Character c;
        if (parse_character_entry(ck, spec["point_insertion"], "point_insertion", job.datum, c))
            job.point_insertion = std::move(c);
    }
    if (spec.contains("curve_insertion")) {
        const auto& e = spec["curve_insertion"];
        if (!e.is_object() || !e.contains("u1") || !e.contains("u2") ||
            !e.contains("intersection")) {
            ck.fail("curve_insertion must carry u1, u2 and intersection");
        } else {
            CurveInsertion ins;
            bool ok = parse_character_entry(ck, e["u1"], "curve_insertion.u1", job.datum, ins.u1);
            ok = parse_character_entry(ck, e["u2"], "curve_insertion.u2", job.datum, ins.u2) && ok;
            if (!e["intersection"].is_number_integer()) {
                ck.fail("curve_insertion.intersection must be an integer");
                ok = false;
            } else {
                ins.intersection = e["intersection"].get<long>();
            }
            for (auto it = e.begin(); it != e.end(); ++it)
                if (it.key() != "u1" && it.key() != "u2" && it.key() != "intersection")
                    ck.fail("unknown field: curve_insertion." + it.key());
            if (ok)
                job.curve_insertion = std::move(ins);
        }
    }
    ck.finish();
    return job;
}

PairingRequest pairing_request_from_json(const ordered_json& spec) {
    Checker ck;
    if (!spec.is_object()) {
        ck.fail("pairing spec must be a JSON object");
        ck.finish();
    }
    ck.unknown_keys(spec, {"command", "type", "genus", "marked", "schedule", "deformation",
                           "order", "mode", "period", "max_degree"});
    PairingRequest req;
    req.datum = parse_datum(ck, spec);

    long genus = 0;
    if (ck.require_long(spec, "genus", genus)) {
        if (genus < 0)
            ck.fail("genus must be nonnegative");
        else
            req.genus = genus;
    }
    long order = 0;
    if (ck.optional_long(spec, "order", order)) {
        if (order < 0)
            ck.fail("order must be nonnegative");
        else
            req.order = static_cast<int>(order);
    }
    if (spec.contains("marked")) {
        if (!spec["marked"].is_array()) {
            ck.fail("marked must be an array of weight coordinate arrays");
        } else {
            std::size_t i = 0;
            for (const auto& e : spec["marked"]) {
                const std::string where = "marked[" + std::to_string(i) + "]";
                if (!e.is_array()) {
                    ck.fail(where + " must be an array of rationals");
                } else {
                    std::vector<Rational> a;
                    bool ok = true;
                    for (const auto& x : e) {
                        try {
                            a.push_back(rational_from_json(x));
                        } catch (const SpecError& err) {
                            ck.fail(where + ": " + err.what());
                            ok = false;
                            break;
                        }
                    }
                    if (ok && req.datum && static_cast<int>(a.size()) != req.datum->rank) {
                        ck.fail(where + " must have " + std::to_string(req.datum->rank) +
                                " coordinates");
                        ok = false;
                    }
                    if (ok)
                        req.marked.push_back(std::move(a));
                }
                ++i;
            }
        }
    }
    if (!spec.contains("schedule")) {
        ck.fail("missing field: schedule");
    } else if (!spec["schedule"].is_array() || spec["schedule"].empty()) {
        ck.fail("schedule must be a nonempty array of integer levels");
    } else {
        for (const auto& e : spec["schedule"]) {
            if (!e.is_number_integer()) {
                ck.fail("schedule must contain only integers");
                break;
            }
            req.schedule.push_back(e.get<long>());
        }
    }
    if (req.datum) {
        for (long k : req.schedule) {
            if (k + req.datum->dual_coxeter < 1)
                ck.fail("schedule level " + std::to_string(k) +
                        " must exceed minus the dual Coxeter number");
            for (std::size_t j = 0; j < req.marked.size(); ++j)
                for (const Rational& x : req.marked[j])
                    if (!(Rational(k) * x).is_integer()) {
                        ck.fail("schedule level " + std::to_string(k) + " does not scale marked[" +
                                std::to_string(j) + "] into the weight lattice");
                        break;
                    }
        }
    }
    if (spec.contains("deformation"))
        parse_character_sum(ck, spec["deformation"], "deformation", req.datum, req.deformation);
    ck.finish();
    return req;
}

OutputOptions output_options_from_json(const ordered_json& spec) {
    Checker ck;
    OutputOptions opt;
    if (spec.contains("breakdown")) {
        if (!spec["breakdown"].is_boolean())
            ck.fail("breakdown must be a boolean");
        else
            opt.breakdown = spec["breakdown"].get<bool>();
    }
    if (spec.contains("mode")) {
        if (!spec["mode"].is_string() ||
            (spec["mode"] != "multiplicity" && spec["mode"] != "derivative"))
            ck.fail("mode must be \"multiplicity\" or \"derivative\"");
        else
            opt.mode = spec["mode"].get<std::string>();
    }
    long period = 0;
    if (ck.optional_long(spec, "period", period)) {
        if (period < 1)
            ck.fail("period must be at least 1");
        else
            opt.period = period;
    }
    long max_degree = 0;
    if (ck.optional_long(spec, "max_degree", max_degree)) {
        if (max_degree < 0)
            ck.fail("max_degree must be nonnegative");
        else
            opt.max_degree = static_cast<int>(max_degree);
    }
    ck.finish();
    return opt;
}

}  // namespace flatk
