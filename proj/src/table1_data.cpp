#include "placeval/panel.hpp"

#include <array>

namespace placeval {
namespace {

const std::array<const char*, 20> kUnits = {
    "Zhoushan", "Wuxi", "Changzhou", "Suzhou", "Nantong",
    "Lianyungang", "Yancheng", "Yangzhou", "Zhenjiang", "Wenzhou",
    "Huzhou", "Jinhua", "Quzhou", "Bengbu", "Huainan",
    "Huaibei", "Tongling", "Anqing", "Huangshan", "Chuzhou",
};

const std::array<std::array<double, 20>, 21> kValues = {{
    {{0.70, 1.54, 0.95, 1.27, 0.85, 0.56, 0.96, 0.95, 1.04, 1.08, 0.84, 1.53, 0.82, 0.81, 0.30, 0.45, 0.34, 0.65, 0.44, 0.97}},
    {{0.58, 1.59, 0.85, 1.19, 0.90, 0.80, 1.00, 0.67, 1.01, 0.98, 0.82, 2.06, 0.81, 0.84, 0.32, 0.54, 0.35, 0.88, 0.92, 0.91}},
    {{0.59, 1.55, 0.90, 1.11, 0.82, 0.68, 0.91, 0.78, 0.89, 0.79, 0.87, 2.16, 0.86, 1.13, 0.59, 0.78, 0.65, 0.98, 0.97, 1.50}},
    {{0.47, 1.54, 0.69, 1.16, 1.00, 0.48, 1.09, 0.72, 0.85, 0.87, 0.94, 2.00, 0.62, 0.60, 0.35, 0.28, 0.29, 0.66, 0.66, 0.99}},
    {{0.32, 0.86, 1.18, 0.55, 0.93, 1.13, 1.21, 1.11, 1.40, 0.45, 0.54, 0.78, 0.35, 0.37, 0.33, 0.17, 0.24, 0.37, 0.41, 0.58}},
    {{0.50, 1.42, 0.73, 1.10, 0.90, 0.55, 1.04, 0.93, 0.99, 0.79, 0.99, 1.82, 0.55, 0.47, 0.47, 0.34, 0.35, 0.60, 0.51, 1.16}},
    {{0.54, 1.41, 0.93, 1.03, 1.04, 0.58, 1.45, 0.79, 1.06, 0.92, 0.94, 1.37, 0.59, 0.57, 0.75, 0.55, 0.45, 0.68, 0.53, 1.23}},
    {{0.49, 1.35, 0.77, 1.18, 1.03, 0.58, 1.57, 0.74, 0.88, 1.05, 0.97, 1.28, 0.63, 0.53, 0.67, 0.58, 0.44, 0.61, 0.49, 1.06}},
    {{0.70, 1.20, 0.87, 0.92, 0.93, 0.71, 0.97, 0.94, 1.10, 0.98, 0.93, 0.88, 0.63, 0.75, 1.08, 0.83, 0.77, 0.77, 0.64, 1.47}},
    {{0.70, 1.21, 0.86, 1.03, 0.92, 0.72, 0.92, 0.94, 1.06, 1.08, 0.94, 0.85, 0.60, 0.84, 0.88, 0.89, 0.85, 0.84, 0.59, 1.32}},
    {{0.76, 1.28, 0.85, 1.00, 0.98, 0.60, 0.85, 0.92, 1.03, 1.27, 0.88, 0.89, 0.63, 0.86, 0.72, 0.84, 0.91, 0.94, 0.59, 0.98}},
    {{0.67, 1.33, 0.86, 1.01, 0.99, 0.58, 0.87, 0.94, 1.01, 1.08, 0.87, 0.96, 0.62, 0.94, 0.65, 0.73, 1.01, 0.88, 0.50, 0.91}},
    {{0.62, 1.33, 0.85, 1.03, 0.96, 0.52, 0.79, 0.92, 1.04, 1.11, 0.89, 1.07, 0.63, 0.75, 0.59, 0.68, 0.91, 0.67, 0.44, 0.67}},
    {{0.60, 1.20, 0.91, 1.07, 0.91, 0.50, 0.74, 0.90, 1.12, 1.14, 0.88, 1.07, 0.66, 0.67, 0.70, 0.67, 0.72, 0.60, 0.42, 0.57}},
    {{0.56, 1.14, 0.94, 1.21, 0.91, 0.51, 0.71, 0.91, 1.12, 1.10, 0.83, 1.01, 0.59, 0.56, 0.66, 0.58, 0.58, 0.49, 0.40, 0.47}},
    {{0.60, 1.15, 1.13, 1.26, 0.91, 0.50, 0.67, 0.92, 1.05, 1.17, 0.88, 0.98, 0.63, 0.52, 0.65, 0.60, 0.68, 0.56, 0.42, 0.52}},
    {{0.64, 1.18, 0.89, 1.14, 0.84, 0.53, 0.69, 0.86, 0.98, 0.83, 0.87, 1.14, 0.71, 0.50, 0.59, 0.55, 0.71, 0.58, 0.48, 0.56}},
    {{0.64, 1.16, 0.92, 1.10, 0.77, 0.54, 0.69, 0.88, 0.96, 0.82, 0.85, 1.03, 0.73, 0.47, 0.63, 0.51, 0.57, 0.60, 0.46, 0.56}},
    {{0.80, 1.31, 0.97, 1.10, 0.77, 0.64, 0.74, 0.90, 1.00, 0.81, 0.95, 0.97, 0.82, 0.62, 0.47, 0.57, 0.69, 0.65, 0.64, 0.77}},
    {{0.85, 1.30, 1.04, 1.27, 0.87, 0.67, 0.81, 1.04, 1.02, 0.97, 0.96, 1.10, 1.08, 0.85, 0.80, 1.10, 0.90, 1.04, 0.66, 0.83}},
    {{0.46, 1.28, 1.05, 1.35, 0.79, 0.62, 0.69, 0.85, 0.92, 0.78, 0.76, 0.77, 0.76, 0.68, 0.56, 0.53, 0.76, 0.59, 0.62, 0.73}},
}};

const std::array<double, 20> kPrintedMean = {
    0.61, 1.30, 0.91, 1.09, 0.91, 0.62, 0.92, 0.89, 1.03, 0.95, 0.88, 1.22, 0.68, 0.68, 0.61, 0.61, 0.63, 0.70, 0.56, 0.89};

const std::array<double, 21> kPrintedRange = {
    1.23, 1.75, 1.57, 1.72, 1.24, 1.48, 0.99, 1.13, 0.83, 0.73, 0.69, 0.83, 0.89, 0.78, 0.81, 0.83, 0.70, 0.70, 0.84, 0.65, 0.89};

}  // namespace

OutcomePanel bundled_table1() {
    std::vector<std::string> units(kUnits.begin(), kUnits.end());
    std::vector<int> years;
    for (int y = 1995; y <= 2015; ++y) years.push_back(y);
    std::vector<std::vector<double>> values;
    values.reserve(kValues.size());
    for (const auto& row : kValues) values.emplace_back(row.begin(), row.end());
    return OutcomePanel(std::move(units), std::move(years), std::move(values),
                        "super_efficiency");
}

const std::map<std::string, double>& bundled_table1_printed_means() {
    static const std::map<std::string, double> means = [] {
        std::map<std::string, double> m;
        for (std::size_t u = 0; u < kUnits.size(); ++u) m[kUnits[u]] = kPrintedMean[u];
        return m;
    }();
    return means;
}

const std::map<int, double>& bundled_table1_printed_ranges() {
    static const std::map<int, double> ranges = [] {
        std::map<int, double> r;
        for (std::size_t y = 0; y < kPrintedRange.size(); ++y)
            r[1995 + static_cast<int>(y)] = kPrintedRange[y];
        return r;
    }();
    return ranges;
}

}  // namespace placeval
