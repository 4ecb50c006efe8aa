#include "tsecon/pipeline.hpp"

#include <algorithm>

#include "tsecon/csv.hpp"
#include "tsecon/svg.hpp"

namespace tsecon {

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(name) + ": " + e.what());
    }
}

std::span<const double> as_span(const std::vector<double>& v) {
    return {v.data(), v.size()};
}

}  // namespace

ReportBundle run_pipeline(const PipelineConfig& cfg) {
    ReportBundle bundle;
    bundle.config = cfg;

    const std::vector<TimeSeries> raw =
        stage("load", [&] { return load_csv(cfg.input_path, cfg.variables); });

    std::vector<TimeSeries> transformed = stage("transforms", [&] {
        std::vector<TimeSeries> out;
        out.reserve(raw.size());
        for (const auto& ts : raw) {
            const auto it = cfg.transforms.find(ts.name());
            TimeSeries cur = ts;
            if (it != cfg.transforms.end()) {
                if (it->second.log) cur = log_transform(cur);
                if (it->second.seasonal_adjust) cur = seasonal_adjust(cur);
            }
            out.push_back(std::move(cur));
        }
        return out;
    });
    for (const auto& ts : transformed) bundle.var_names.push_back(ts.name());

    const Dataset levels = stage("align", [&] { return align(transformed); });

    bundle.stationarity = stage("stationarity", [&] {
        std::vector<AdfPair> rows;
        rows.reserve(transformed.size());
        for (const auto& ts : transformed) {
            AdfPair pair;
            pair.variable = ts.name();
            pair.level = adf_test(ts, cfg.adf_spec, cfg.adf_policy);
            pair.first_difference = adf_test(difference(ts, 1), cfg.adf_spec, cfg.adf_policy);
            rows.push_back(std::move(pair));
        }
        return rows;
    });

    const Dataset var_data =
        cfg.var_basis == VarBasis::Levels ? levels : stage("difference", [&] {
            return levels.differenced();
        });

    bundle.lag_table =
        stage("lag_selection", [&] { return select_lag(var_data, cfg.max_p, true); });
    bundle.selected_p = std::max(1, bundle.lag_table.selected_aic);

    bundle.var_fit = stage("var_fit", [&] { return fit_var(var_data, bundle.selected_p, true); });
    bundle.stab = stage("stability", [&] { return stability(bundle.var_fit); });
    bundle.svg = render_unit_circle_svg(bundle.stab);

    bundle.lm = stage("residual_lm", [&] {
        std::vector<LmResult> rows;
        rows.reserve(12);
        for (int h = 1; h <= 12; ++h) rows.push_back(residual_lm(bundle.var_fit, h));
        return rows;
    });

    const int vecm_lag = cfg.vecm_lag >= 0 ? cfg.vecm_lag : std::max(0, bundle.selected_p - 1);
    bundle.johansen =
        stage("johansen", [&] { return johansen_trace(levels, vecm_lag, cfg.johansen_case); });

    stage("toda_yamamoto", [&] {
        if (cfg.ty_dmax >= 0) {
            bundle.d_max = cfg.ty_dmax;
        } else {
            bundle.d_max = 0;
            for (int j = 0; j < levels.cols(); ++j) {
                const Eigen::VectorXd col = levels.column(j);
                const std::vector<double> v(col.data(), col.data() + col.size());
                const IntegrationOrder io =
                    integration_order(as_span(v), 2, cfg.alpha, cfg.adf_spec, cfg.adf_policy);
                bundle.d_max = std::max(bundle.d_max, io.order);
                bundle.d_max_capped = bundle.d_max_capped || io.capped;
            }
        }
        for (int target = 0; target < levels.cols(); ++target) {
            for (int cause = 0; cause < levels.cols(); ++cause) {
                if (target == cause) continue;
                bundle.causality.push_back(toda_yamamoto(levels, target, cause,
                                                         bundle.selected_p, bundle.d_max,
                                                         cfg.ty_mode));
            }
        }
        return 0;
    });

    return bundle;
}

}  // namespace tsecon
