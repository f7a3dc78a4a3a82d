#pragma once

// JSON (de)serialization for channel specs and mixture models.  This is the
// only layer that speaks decibels: configs carry "mean_snr_db", everything
// inside the library is linear.  Unknown fields are rejected so that typos
// fail loudly instead of silently using defaults.

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "plsec/channels.hpp"
#include "plsec/errors.hpp"
#include "plsec/mixtures.hpp"

namespace plsec {

using ordered_json = nlohmann::ordered_json;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

namespace detail {

inline void check_fields(const nlohmann::json& j,
                         const std::set<std::string>& allowed,
                         const std::string& ctx) {
    if (!j.is_object())
        throw invalid_argument_error(ctx + ": expected a JSON object", ctx);
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw invalid_argument_error(ctx + ": unknown field \"" + item.key() + "\"",
                                         item.key());
}

inline double require_number(const nlohmann::json& j, const std::string& key,
                             const std::string& ctx) {
    if (!j.contains(key))
        throw invalid_argument_error(ctx + ": missing required field \"" + key + "\"",
                                     key);
    if (!j.at(key).is_number())
        throw invalid_argument_error(ctx + ": field \"" + key + "\" must be a number",
                                     key);
    return j.at(key).get<double>();
}

} // namespace detail

// --------------------------- channel_spec ----------------------------------

inline channel_spec spec_from_json(const nlohmann::json& j,
                                   const std::string& ctx = "channel") {
    detail::check_fields(j, {"family", "params", "mean_snr_db", "mean_snr"}, ctx);
    if (!j.contains("family") || !j.at("family").is_string())
        throw invalid_argument_error(ctx + ": requires a string field \"family\"",
                                     "family");
    const std::string fname = j.at("family").get<std::string>();
    const auto fam = family_from_name(fname);
    if (!fam)
        throw invalid_argument_error(ctx + ": unknown family \"" + fname + "\"",
                                     "family");

    const bool has_db = j.contains("mean_snr_db");
    const bool has_lin = j.contains("mean_snr");
    if (has_db == has_lin)
        throw invalid_argument_error(
            ctx + ": exactly one of \"mean_snr_db\" or \"mean_snr\" is required",
            "mean_snr_db");
    const double mean_snr = has_db
                                ? db_to_linear(detail::require_number(j, "mean_snr_db",
                                                                      ctx))
                                : detail::require_number(j, "mean_snr", ctx);

    nlohmann::json params = nlohmann::json::object();
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            throw invalid_argument_error(ctx + ": \"params\" must be an object",
                                         "params");
        params = j.at("params");
    }
    const std::string pctx = ctx + ".params";

    channel_spec spec;
    switch (*fam) {
        case fading_family::rayleigh:
            detail::check_fields(params, {}, pctx);
            spec = channel_spec::rayleigh(mean_snr);
            break;
        case fading_family::nakagami_m:
            detail::check_fields(params, {"m"}, pctx);
            spec = channel_spec::nakagami(detail::require_number(params, "m", pctx),
                                          mean_snr);
            break;
        case fading_family::weibull:
            detail::check_fields(params, {"alpha"}, pctx);
            spec = channel_spec::weibull(detail::require_number(params, "alpha", pctx),
                                         mean_snr);
            break;
        case fading_family::alpha_mu:
            detail::check_fields(params, {"alpha", "mu"}, pctx);
            spec = channel_spec::alpha_mu(detail::require_number(params, "alpha", pctx),
                                          detail::require_number(params, "mu", pctx),
                                          mean_snr);
            break;
        case fading_family::maxwell:
            detail::check_fields(params, {}, pctx);
            spec = channel_spec::maxwell(mean_snr);
            break;
        case fading_family::cascaded_alpha_mu: {
            detail::check_fields(params, {"stages"}, pctx);
            if (!params.contains("stages") || !params.at("stages").is_array() ||
                params.at("stages").empty())
                throw invalid_argument_error(
                    pctx + ": requires a non-empty array field \"stages\"", "stages");
            std::vector<alpha_mu_stage> stages;
            std::size_t idx = 0;
            for (const auto& st : params.at("stages")) {
                const std::string sctx = pctx + ".stages[" + std::to_string(idx++) + "]";
                detail::check_fields(st, {"alpha", "mu"}, sctx);
                stages.push_back({detail::require_number(st, "alpha", sctx),
                                  detail::require_number(st, "mu", sctx)});
            }
            spec = channel_spec::cascaded_alpha_mu(std::move(stages), mean_snr);
            break;
        }
        case fading_family::fisher_f:
            detail::check_fields(params, {"m", "m_s"}, pctx);
            spec = channel_spec::fisher_f(detail::require_number(params, "m", pctx),
                                          detail::require_number(params, "m_s", pctx),
                                          mean_snr);
            break;
        case fading_family::kg:
            detail::check_fields(params, {"m_l", "m_sl"}, pctx);
            spec = channel_spec::kg(detail::require_number(params, "m_l", pctx),
                                    detail::require_number(params, "m_sl", pctx),
                                    mean_snr);
            break;
        case fading_family::egk:
            detail::check_fields(params, {"m", "xi", "m_s", "xi_s"}, pctx);
            spec = channel_spec::egk(detail::require_number(params, "m", pctx),
                                     detail::require_number(params, "xi", pctx),
                                     detail::require_number(params, "m_s", pctx),
                                     detail::require_number(params, "xi_s", pctx),
                                     mean_snr);
            break;
    }
    spec.validate();
    return spec;
}

inline ordered_json spec_to_json(const channel_spec& spec) {
    ordered_json j;
    j["family"] = family_name(spec.family());
    ordered_json params = ordered_json::object();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, nakagami_params>) {
                params["m"] = p.m;
            } else if constexpr (std::is_same_v<T, weibull_params>) {
                params["alpha"] = p.alpha;
            } else if constexpr (std::is_same_v<T, alpha_mu_params>) {
                params["alpha"] = p.alpha;
                params["mu"] = p.mu;
            } else if constexpr (std::is_same_v<T, cascaded_alpha_mu_params>) {
                ordered_json stages = ordered_json::array();
                for (const auto& st : p.stages)
                    stages.push_back({{"alpha", st.alpha}, {"mu", st.mu}});
                params["stages"] = std::move(stages);
            } else if constexpr (std::is_same_v<T, fisher_f_params>) {
                params["m"] = p.m;
                params["m_s"] = p.m_s;
            } else if constexpr (std::is_same_v<T, kg_params>) {
                params["m_l"] = p.m_l;
                params["m_sl"] = p.m_sl;
            } else if constexpr (std::is_same_v<T, egk_params>) {
                params["m"] = p.m;
                params["xi"] = p.xi;
                params["m_s"] = p.m_s;
                params["xi_s"] = p.xi_s;
            }
        },
        spec.params);
    j["params"] = std::move(params);
    j["mean_snr_db"] = linear_to_db(spec.mean_snr);
    return j;
}

// ----------------------------- mg_model ------------------------------------

inline ordered_json mg_to_json(const mg_model& mg) {
    ordered_json j;
    j["type"] = "mixture_gamma";
    ordered_json comps = ordered_json::array();
    for (const auto& c : mg.components)
        comps.push_back({{"alpha", c.alpha}, {"beta", c.beta}, {"zeta", c.zeta}});
    j["components"] = std::move(comps);
    j["metadata"] = {{"fit_error", mg.meta.fit_error},
                     {"accuracy_warning", mg.meta.accuracy_warning},
                     {"laguerre_scale", mg.meta.laguerre_scale},
                     {"reference", mg.meta.reference}};
    return j;
}

inline mg_model mg_from_json(const nlohmann::json& j,
                             const std::string& ctx = "mixture_gamma") {
    detail::check_fields(j, {"type", "components", "metadata"}, ctx);
    if (j.contains("type") && j.at("type") != "mixture_gamma")
        throw invalid_argument_error(ctx + ": type must be \"mixture_gamma\"", "type");
    if (!j.contains("components") || !j.at("components").is_array() ||
        j.at("components").empty())
        throw invalid_argument_error(
            ctx + ": requires a non-empty array field \"components\"", "components");
    mg_model mg;
    std::size_t idx = 0;
    for (const auto& c : j.at("components")) {
        const std::string cctx = ctx + ".components[" + std::to_string(idx++) + "]";
        detail::check_fields(c, {"alpha", "beta", "zeta"}, cctx);
        mg.components.push_back({detail::require_number(c, "alpha", cctx),
                                 detail::require_number(c, "beta", cctx),
                                 detail::require_number(c, "zeta", cctx)});
    }
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        detail::check_fields(
            m, {"fit_error", "accuracy_warning", "laguerre_scale", "reference"},
            ctx + ".metadata");
        if (m.contains("fit_error")) mg.meta.fit_error = m.at("fit_error").get<double>();
        if (m.contains("accuracy_warning"))
            mg.meta.accuracy_warning = m.at("accuracy_warning").get<bool>();
        if (m.contains("laguerre_scale"))
            mg.meta.laguerre_scale = m.at("laguerre_scale").get<double>();
        if (m.contains("reference"))
            mg.meta.reference = m.at("reference").get<std::string>();
    }
    mg.validate();
    return mg;
}

// ----------------------------- mog_model -----------------------------------

inline ordered_json mog_to_json(const mog_model& mog) {
    ordered_json j;
    j["type"] = "mixture_gaussian";
    j["mean_snr"] = mog.mean_snr;
    ordered_json comps = ordered_json::array();
    for (const auto& c : mog.components)
        comps.push_back({{"weight", c.weight}, {"mean", c.mean}, {"sigma", c.sigma}});
    j["components"] = std::move(comps);
    j["metadata"] = {{"seed", mog.meta.seed},
                     {"sample_count", mog.meta.sample_count},
                     {"iterations", mog.meta.iterations},
                     {"converged", mog.meta.converged},
                     {"final_log_likelihood", mog.meta.final_log_likelihood},
                     {"pruned_components", mog.meta.pruned_components},
                     {"cdf_mse", mog.meta.cdf_mse},
                     {"normalization_defect", mog.meta.normalization_defect}};
    return j;
}

inline mog_model mog_from_json(const nlohmann::json& j,
                               const std::string& ctx = "mixture_gaussian") {
    detail::check_fields(j, {"type", "mean_snr", "components", "metadata"}, ctx);
    if (j.contains("type") && j.at("type") != "mixture_gaussian")
        throw invalid_argument_error(ctx + ": type must be \"mixture_gaussian\"",
                                     "type");
    mog_model mog;
    mog.mean_snr = detail::require_number(j, "mean_snr", ctx);
    if (!j.contains("components") || !j.at("components").is_array() ||
        j.at("components").empty())
        throw invalid_argument_error(
            ctx + ": requires a non-empty array field \"components\"", "components");
    std::size_t idx = 0;
    for (const auto& c : j.at("components")) {
        const std::string cctx = ctx + ".components[" + std::to_string(idx++) + "]";
        detail::check_fields(c, {"weight", "mean", "sigma"}, cctx);
        mog.components.push_back({detail::require_number(c, "weight", cctx),
                                  detail::require_number(c, "mean", cctx),
                                  detail::require_number(c, "sigma", cctx)});
    }
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        detail::check_fields(m,
                             {"seed", "sample_count", "iterations", "converged",
                              "final_log_likelihood", "pruned_components", "cdf_mse",
                              "normalization_defect"},
                             ctx + ".metadata");
        if (m.contains("seed")) mog.meta.seed = m.at("seed").get<std::uint64_t>();
        if (m.contains("sample_count"))
            mog.meta.sample_count = m.at("sample_count").get<std::size_t>();
        if (m.contains("iterations"))
            mog.meta.iterations = m.at("iterations").get<int>();
        if (m.contains("converged"))
            mog.meta.converged = m.at("converged").get<bool>();
        if (m.contains("final_log_likelihood"))
            mog.meta.final_log_likelihood = m.at("final_log_likelihood").get<double>();
        if (m.contains("pruned_components"))
            mog.meta.pruned_components = m.at("pruned_components").get<int>();
        if (m.contains("cdf_mse")) mog.meta.cdf_mse = m.at("cdf_mse").get<double>();
        if (m.contains("normalization_defect"))
            mog.meta.normalization_defect = m.at("normalization_defect").get<double>();
    }
    mog.validate();
    return mog;
}

} // namespace plsec
