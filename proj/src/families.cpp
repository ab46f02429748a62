#include "csnet/families.hpp"

#include <set>

#include "csnet/error.hpp"

namespace csnet {

QPoly Sequence::term(int k) const {
    if (k < first_index_)
        throw Error(ErrorKind::IndexError, "sequence index " + std::to_string(k) + " below first index " +
                                               std::to_string(first_index_));
    const auto offset = static_cast<std::size_t>(k - first_index_);
    if (offset < prefix_.size()) return prefix_[offset];
    if (!tail_)
        throw Error(ErrorKind::SequenceExhausted,
                    "term " + std::to_string(k) + " requested beyond a finite prefix of length " +
                        std::to_string(prefix_.size()));
    return tail_->linear * QPoly(static_cast<long>(k)) + tail_->constant;
}

FamilySpec::FamilySpec(std::string name, Sequence r, Sequence s, Sequence t, std::optional<Sequence> witness_b,
                       std::optional<Sequence> witness_c)
    : name_(std::move(name)), r_(std::move(r)), s_(std::move(s)), t_(std::move(t)),
      witness_b_(std::move(witness_b)), witness_c_(std::move(witness_c)) {}

namespace {

QPoly checked(const Sequence& seq, int k, const std::string& family, const char* label) {
    QPoly v = seq.term(k);
    if (!v.is_q_nonnegative())
        throw Error(ErrorKind::NonNonnegativeParameter,
                    family + ": " + label + "_" + std::to_string(k) + " = " + v.to_string() + " is not q-nonnegative");
    return v;
}

} // namespace

QPoly FamilySpec::r(int k) const {
    if (k < 0) return {};
    return checked(r_, k, name_, "r");
}

QPoly FamilySpec::s(int k) const { return checked(s_, k, name_, "s"); }

QPoly FamilySpec::t(int k) const {
    if (k <= 0) return {};
    return checked(t_, k, name_, "t");
}

QPoly FamilySpec::b(int k) const {
    if (!witness_b_) throw Error(ErrorKind::MissingWitness, name_ + " has no witness sequence b");
    return checked(*witness_b_, k, name_, "b");
}

QPoly FamilySpec::c(int k) const {
    if (!witness_c_) throw Error(ErrorKind::MissingWitness, name_ + " has no witness sequence c");
    return checked(*witness_c_, k, name_, "c");
}

ConditionReport check_condition(const FamilySpec& f, int which, int up_to) {
    if (which < 1 || which > 5) throw Error(ErrorKind::OutOfRange, "condition index must be in 1..5");
    if (up_to < 0) throw Error(ErrorKind::OutOfRange, "up_to must be nonnegative");
    if (which == 5 && !f.has_witnesses())
        throw Error(ErrorKind::MissingWitness, f.name() + ": condition 5 needs witness sequences b and c");

    ConditionReport report;
    report.condition_index = which;
    auto fail = [&](int k, QPoly diff) {
        report.holds = false;
        report.first_violation = Violation{k, std::move(diff)};
        return report;
    };

    for (int k = 0; k <= up_to; ++k) {
        if (which == 5) {
            const Sequence& bs = *f.b_sequence();
            const Sequence& cs = *f.c_sequence();
            QPoly rk = f.r(k);
            if (rk != QPoly(1)) return fail(k, rk - QPoly(1));
            QPoly bk = bs.term(k), ck = cs.term(k), bk1 = bs.term(k + 1);
            if (!bk.is_q_nonnegative()) return fail(k, bk);
            if (!ck.is_q_nonnegative()) return fail(k, ck);
            if (!bk1.is_q_nonnegative()) return fail(k + 1, bk1);
            if (QPoly d = f.s(k) - (bk + ck); !d.is_zero()) return fail(k, d);
            if (QPoly d = f.t(k + 1) - bk1 * ck; !d.is_zero()) return fail(k, d);
            continue;
        }

        QPoly bound;
        switch (which) {
        case 1: bound = k == 0 ? f.r(0) : f.r(k) + f.t(k); break;
        case 2: bound = k == 0 ? f.t(1) : f.r(k - 1) + f.t(k + 1); break;
        case 3: bound = k == 0 ? QPoly(1) : f.r(k - 1) * f.t(k) + QPoly(1); break;
        case 4: bound = k == 0 ? f.r(0) * f.t(1) : f.r(k) * f.t(k + 1) + QPoly(1); break;
        }
        QPoly diff = f.s(k) - bound;
        if (!diff.is_q_nonnegative()) return fail(k, diff);
    }
    return report;
}

FamilySpec builtin(const std::string& name) {
    const QPoly q = QPoly::q();
    if (name == "eulerian") {
        // r_k = k+1, s_k = k(q+1)+1, t_k = kq
        return FamilySpec("eulerian", Sequence({}, AffineTail{1, 1}),
                          Sequence({}, AffineTail{q + QPoly(1), 1}),
                          Sequence({}, AffineTail{q, {}}, 1));
    }
    if (name == "schroder") {
        // r_k = 1, s_0 = q+1, s_k = 2q+1, t_k = q(q+1); b = (0,q,q,...), c = (q+1,q+1,...)
        return FamilySpec("schroder", Sequence::constant(1), Sequence({q + QPoly(1)}, AffineTail{{}, QPoly{1, 2}}),
                          Sequence::constant(q * (q + QPoly(1)), 1), Sequence({QPoly()}, AffineTail{{}, q}),
                          Sequence::constant(q + QPoly(1)));
    }
    if (name == "narayana") {
        // r_k = 1, s_0 = q, s_k = q+1, t_k = q; b = (0,1,1,...), c = (q,q,...)
        return FamilySpec("narayana", Sequence::constant(1), Sequence({q}, AffineTail{{}, q + QPoly(1)}),
                          Sequence::constant(q, 1), Sequence({QPoly()}, AffineTail{{}, 1}),
                          Sequence::constant(q));
    }
    throw Error(ErrorKind::UnknownFamily, "no builtin family named \"" + name + "\"");
}

std::vector<std::string> builtin_names() { return {"eulerian", "schroder", "narayana"}; }

std::vector<int> builtin_conditions(const std::string& name) {
    if (name == "eulerian") return {1};
    if (name == "schroder") return {5};
    if (name == "narayana") return {2, 4, 5};
    throw Error(ErrorKind::UnknownFamily, "no builtin family named \"" + name + "\"");
}

namespace {

Sequence sequence_from_json(const nlohmann::json& j, const std::string& key, int first_index) {
    std::vector<QPoly> prefix;
    std::optional<AffineTail> tail;
    if (j.is_array()) {
        for (const auto& p : j) prefix.push_back(qpoly_from_json(p));
    } else if (j.is_object()) {
        for (const auto& [k, _] : j.items())
            if (k != "prefix" && k != "tail") throw Error(ErrorKind::SchemaError, key + ": unknown field \"" + k + "\"");
        if (j.contains("prefix")) {
            if (!j["prefix"].is_array()) throw Error(ErrorKind::SchemaError, key + ".prefix must be an array");
            for (const auto& p : j["prefix"]) prefix.push_back(qpoly_from_json(p));
        }
        if (j.contains("tail") && !j["tail"].is_null()) {
            const auto& tj = j["tail"];
            if (!tj.is_object()) throw Error(ErrorKind::SchemaError, key + ".tail must be an object");
            for (const auto& [k, _] : tj.items())
                if (k != "linear" && k != "constant")
                    throw Error(ErrorKind::SchemaError, key + ".tail: unknown field \"" + k + "\"");
            AffineTail t;
            if (tj.contains("linear")) t.linear = qpoly_from_json(tj["linear"]);
            if (tj.contains("constant")) t.constant = qpoly_from_json(tj["constant"]);
            tail = std::move(t);
        }
    } else {
        throw Error(ErrorKind::SchemaError, key + ": expected an array or an object with prefix/tail");
    }
    if (prefix.empty() && !tail) throw Error(ErrorKind::SchemaError, key + ": sequence has neither prefix nor tail");
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (!prefix[i].is_q_nonnegative())
            throw Error(ErrorKind::NonNonnegativeParameter,
                        key + "_" + std::to_string(first_index + static_cast<int>(i)) + " = " +
                            prefix[i].to_string() + " is not q-nonnegative");
    return Sequence(std::move(prefix), std::move(tail), first_index);
}

nlohmann::json sequence_to_json(const Sequence& s) {
    nlohmann::json j;
    j["prefix"] = nlohmann::json::array();
    for (const auto& p : s.prefix()) j["prefix"].push_back(to_json(p));
    if (s.tail()) j["tail"] = {{"linear", to_json(s.tail()->linear)}, {"constant", to_json(s.tail()->constant)}};
    return j;
}

} // namespace

FamilySpec load_family(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::SchemaError, "family document must be an object");
    static const std::set<std::string> known = {"name", "description", "r", "s", "t", "witness_b", "witness_c"};
    for (const auto& [k, _] : doc.items())
        if (!known.count(k)) throw Error(ErrorKind::SchemaError, "unknown field \"" + k + "\"");
    for (const char* k : {"name", "r", "s", "t"})
        if (!doc.contains(k)) throw Error(ErrorKind::SchemaError, std::string("missing field \"") + k + "\"");
    if (!doc["name"].is_string()) throw Error(ErrorKind::SchemaError, "name must be a string");
    if (doc.contains("witness_b") != doc.contains("witness_c"))
        throw Error(ErrorKind::SchemaError, "witness_b and witness_c must be given together");

    std::optional<Sequence> wb, wc;
    if (doc.contains("witness_b")) {
        wb = sequence_from_json(doc["witness_b"], "witness_b", 0);
        wc = sequence_from_json(doc["witness_c"], "witness_c", 0);
    }
    return FamilySpec(doc["name"].get<std::string>(), sequence_from_json(doc["r"], "r", 0),
                      sequence_from_json(doc["s"], "s", 0), sequence_from_json(doc["t"], "t", 1), std::move(wb),
                      std::move(wc));
}

FamilySpec load_family(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    return load_family(doc);
}

nlohmann::json to_json(const FamilySpec& f) {
    nlohmann::json j;
    j["name"] = f.name();
    j["r"] = sequence_to_json(f.r_sequence());
    j["s"] = sequence_to_json(f.s_sequence());
    j["t"] = sequence_to_json(f.t_sequence());
    if (f.b_sequence()) j["witness_b"] = sequence_to_json(*f.b_sequence());
    if (f.c_sequence()) j["witness_c"] = sequence_to_json(*f.c_sequence());
    return j;
}

} // namespace csnet
