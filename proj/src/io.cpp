#include "bergehit/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bergehit {

Json certificate_json(const BergePath& p) {
    return Json{{"vertices", p.vertices}, {"edge_ids", p.edge_ids}, {"cycle", false}};
}

Json certificate_json(const BergeCycle& c) {
    return Json{{"vertices", c.vertices}, {"edge_ids", c.edge_ids}, {"cycle", true}};
}

BergePath path_from_json(const Json& j) {
    if (j.value("cycle", false)) throw std::invalid_argument("expected a path certificate");
    return {j.at("vertices").get<std::vector<Vertex>>(), j.at("edge_ids").get<std::vector<EdgeId>>()};
}

BergeCycle cycle_from_json(const Json& j) {
    if (!j.value("cycle", false)) throw std::invalid_argument("expected a cycle certificate");
    return {j.at("vertices").get<std::vector<Vertex>>(), j.at("edge_ids").get<std::vector<EdgeId>>()};
}

Json outcome_json(const DecisionOutcome& out) {
    Json j;
    j["verdict"] = verdict_name(out.verdict);
    j["provenance"] = provenance_name(out.provenance);
    j["certificate"] = out.certificate ? certificate_json(*out.certificate) : Json(nullptr);
    j["longest_path_length"] = out.longest.length();
    j["effort"] = Json{{"rotations", out.effort.rotations},
                       {"extensions", out.effort.extensions},
                       {"reopenings", out.effort.reopenings},
                       {"restarts", out.effort.restarts}};
    if (!out.reason.empty()) j["reason"] = out.reason;
    return j;
}

Json step_json(const AbsorptionStep& step) {
    return Json{{"step", step.step},
                {"gamma_edges", step.gamma_edges},
                {"added", step.added},
                {"arity", step.added.size()},
                {"s", step.s},
                {"t", step.t},
                {"path_length", step.path_length},
                {"result_length", step.result_length},
                {"hamiltonian", step.hamiltonian}};
}

std::string trace_json_lines(const std::vector<AbsorptionStep>& trace) {
    std::string out;
    for (const auto& step : trace) out += step_json(step).dump() + "\n";
    return out;
}

Json threshold_json(const ThresholdReport& rep) {
    Json j;
    j["log_base"] = "e";
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["N"] = rep.N;
    j["eps"] = rep.eps;
    j["c_gamma"] = rep.c_gamma;
    j["p1"] = rep.basic.p1;
    j["p2"] = rep.basic.p2;
    j["m1"] = rep.basic.m1;
    j["m2"] = rep.basic.m2;
    j["m1_floor"] = rep.basic.m1_floor;
    j["m2_ceil"] = rep.basic.m2_ceil;
    j["p0"] = rep.p0.p0;
    j["p0_residual"] = rep.p0.residual;
    j["p0_iterations"] = rep.p0.iterations;
    j["gamma"] = rep.shifted.gamma;
    j["p3"] = rep.shifted.p3;
    j["p4"] = rep.shifted.p4;
    j["m3"] = rep.shifted.m3;
    j["m4"] = rep.shifted.m4;
    j["m3_floor"] = rep.shifted.m3_floor;
    j["m4_ceil"] = rep.shifted.m4_ceil;
    j["p3_floor_ok"] = rep.shifted.p3_floor_ok;
    j["p3_floor_bound"] = rep.shifted.p3_floor_bound;
    j["p4_ceiling_ok"] = rep.shifted.p4_ceiling_ok;
    j["p4_ceiling_bound"] = rep.shifted.p4_ceiling_bound;
    j["L1_ok"] = rep.lemma24.l1_ok;
    j["L2_ok"] = rep.lemma24.l2_ok;
    j["L3_ok"] = rep.lemma24.l3_ok;
    j["L_s3"] = rep.lemma24.s3;
    j["L_s4"] = rep.lemma24.s4;
    j["L1_bound"] = rep.lemma24.l1_bound;
    j["L2_bound"] = rep.lemma24.l2_bound;
    j["L3_bound"] = rep.lemma24.l3_bound;
    return j;
}

Json properties_json(const std::vector<PropertyVerdict>& verdicts) {
    Json arr = Json::array();
    for (const auto& v : verdicts) {
        Json j{{"property", v.name}, {"status", property_status_name(v.status)}, {"bound", v.bound}};
        if (std::isfinite(v.observed)) j["observed"] = v.observed;
        if (v.status == PropertyStatus::no_counterexample) j["trials"] = v.trials;
        if (v.vertex) j["vertex"] = *v.vertex;
        if (v.edge) j["edge"] = *v.edge;
        if (!v.u.empty()) j["U"] = v.u;
        if (!v.w.empty()) j["W"] = v.w;
        if (!v.detail.empty()) j["detail"] = v.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

namespace {

std::string tau_bh_field(const TrialRecord& r) {
    switch (r.tau_bh_status) {
        case TauStatus::found: return std::to_string(*r.tau_bh);
        case TauStatus::inconclusive: return "inconclusive";
        case TauStatus::no_hit: return "nohit";
        case TauStatus::not_computed: break;
    }
    return "";
}

}  // namespace

std::string trials_csv(const TrialBatch& batch, const std::vector<std::string>& header, bool timing) {
    std::ostringstream os;
    for (const auto& line : header) os << "# " << line << '\n';
    os << "trial,seed,tau2,tauBH,coincide,provenance,millis\n";
    for (const auto& r : batch.records) {
        os << r.trial << ',' << r.seed << ',';
        if (r.tau2) os << *r.tau2;
        os << ',' << tau_bh_field(r) << ',';
        if (r.coincide) os << (*r.coincide ? 1 : 0);
        os << ',' << provenance_name(r.provenance) << ',';
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", r.millis);
            os << buf;
        }
        os << '\n';
    }
    return os.str();
}

Json summary_json(const TrialSummary& s) {
    return Json{{"trials", s.trials},
                {"coincidences", s.coincidences},
                {"non_coincidences", s.non_coincidences},
                {"inconclusive", s.inconclusive},
                {"no_hit", s.no_hit},
                {"coincidence_fraction", s.coincidence_fraction},
                {"tau2", Json{{"min", s.tau2_min},
                              {"q25", s.tau2_q25},
                              {"median", s.tau2_median},
                              {"q75", s.tau2_q75},
                              {"max", s.tau2_max},
                              {"mean", s.tau2_mean}}}};
}

}  // namespace bergehit
