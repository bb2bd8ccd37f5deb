#pragma once

#include <span>
#include <string>

#include "ecosim/experiments.hpp"

namespace ecosim {

// Formats a double with six significant digits, matching the CSV contract.
std::string format_number(double v);

// Header:
// t,mean_age,deaths,trades,w_food,w_mineral,total_money,gdp,mean_bid_food,mean_ask_food,mean_bid_mineral,mean_ask_mineral
std::string timeseries_csv(std::span<const StepStats> history);
void write_timeseries_csv(std::span<const StepStats> history, const std::string& path);

// Header:
// cell,labor,price_regime,layout,contact_radius,n,mean_age,sd_age,sem_age,mean_food_price,sd_food_price
// The companion <path>.tests.csv carries cell_a,cell_b,t,p rows.
std::string summary_csv(std::span<const SummaryRow> rows);
std::string tests_csv(std::span<const PairTest> tests);
void write_summary_csv(std::span<const SummaryRow> rows,
                       std::span<const PairTest> tests, const std::string& path);

}  // namespace ecosim
