#pragma once

#include <json.hpp>

#include "endolift/charset.hpp"
#include "endolift/exact.hpp"
#include "endolift/franke.hpp"
#include "endolift/lift.hpp"
#include "endolift/partition.hpp"
#include "endolift/volume.hpp"
#include "endolift/weight.hpp"

// JSON views of every exported type. Big integers are serialized as decimal
// strings so the payload round-trips losslessly regardless of magnitude.
namespace endolift {

using json = nlohmann::json;

inline json to_json(const HalfInt& h) { return json{{"twice", h.twice()}}; }

inline json to_json(const Rat& r) { return json::array({r.num().str(), r.den().str()}); }

inline json to_json(const PiPower& p) {
    return json{{"coeff", to_json(p.coeff())}, {"pi_exp_twice", p.pi_exp_twice()}};
}

inline json to_json(const CharSet& s) {
    json a = json::array();
    for (const auto& x : s.elements()) a.push_back(to_json(x));
    return a;
}

inline json to_json(const CharType& t) {
    return json{{"kind", std::string(1, kind_letter(t.kind))}, {"rank", t.rank}};
}

inline json to_json(const NumberedPartition& p, const CharSet* labels = nullptr) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    json j{{"blocks", blocks}};
    if (labels) {
        json lab = json::array();
        for (const auto& x : labels->elements()) lab.push_back(to_json(x));
        j["labels"] = lab;
    }
    return j;
}

inline json to_json(const Permutation& w) { return json(w.image); }

inline json to_json(const EtaClass& c) {
    return json{{"stable", c.stable},
                {"fixed", c.fixed},
                {"invariant", c.invariant},
                {"admissible", c.admissible},
                {"chronological", c.chronological}};
}

inline json to_json(const DominantWeight& w) {
    json j{{"shape", w.shape().str()}, {"coords", w.coords()}};
    if (w.shape().shape == Shape::GLxGL1 || w.shape().shape == Shape::GSO) j["a0"] = w.a0();
    return j;
}

inline json to_json(const ArchParam& p) {
    json e = json::array();
    for (const auto& b : p.entries) e.push_back(to_json(b));
    return json{{"entries", e}, {"b0", to_json(p.b0)}, {"epsilon", p.epsilon}};
}

inline json to_json(const BlockCharacter& bc) {
    return json{{"sigma", to_json(bc.sigma)}, {"j", bc.j},           {"gamma", bc.gamma},
                {"k", bc.k},                  {"chi", bc.chi},       {"kind", std::string(1, kind_letter(bc.kind))}};
}

inline json to_json(const FrankeTerm& t) {
    json j{{"blocks", to_json(t.partition)["blocks"]},
           {"w_one_line", t.w.image},
           {"length", t.length},
           {"sign", t.sign},
           {"I", t.kostant_I},
           {"levi", t.levi_shape},
           {"shifted_weight", t.shifted_weight}};
    if (!t.block_chars.empty()) {
        json bc = json::array();
        for (const auto& b : t.block_chars) bc.push_back(to_json(b));
        j["block_characters"] = bc;
    }
    return j;
}

inline json to_json(const DConstraint& d) {
    switch (d.kind) {
        case DConstraintKind::MustBeOne: return json{{"kind", "must_be_one"}};
        case DConstraintKind::Free: return json{{"kind", "free"}};
        case DConstraintKind::SignConstrained: return json{{"kind", "sign_constrained"}, {"sign", d.sign}};
    }
    return json();
}

inline json to_json(const OctupleSkeleton& o) {
    return json{{"kind", to_json(o.kind)},        {"gamma", o.gamma},
                {"n", o.n},                       {"seed_set", to_json(o.seed)},
                {"image_set", to_json(o.image)},  {"d_constraint", to_json(o.d_constraint)},
                {"groups", json::array({o.group, o.group1})}};
}

inline json to_json(const LiftFamily& f) {
    json octs = json::array();
    for (const auto& o : f.octuples) octs.push_back(to_json(o));
    return json{{"g", f.g},
                {"r", f.r},
                {"octuples", octs},
                {"sign_obstructed", f.sign_obstructed},
                {"multiplicity", json{{"value", f.multiplicity.str()}, {"conjectural", true}}}};
}

inline json to_json(const EndoscopicGrouping& e) {
    return json{{"sigma_q", e.sigma_q}, {"dim_v", e.dim_v.str()}};
}

inline json to_json(const G3Row& r) {
    return json{{"c1_set", to_json(r.c1_set)},
                {"c1_weight", r.c1_weight},
                {"d2_set", to_json(r.d2_set)},
                {"d2_weights", json::array({r.d2_weights.first, r.d2_weights.second})}};
}

inline json to_json(const VolumeRecord& v) {
    return json{{"group", volume_group_name(v.group, v.rank)},
                {"g", v.rank},
                {"vol_st", to_json(v.vol_st)},
                {"vol_ch", to_json(v.vol_ch_value)},
                {"conversion_exponent", v.conversion_exponent}};
}

}  // namespace endolift
