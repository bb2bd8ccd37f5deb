#include "ecosim/csv.hpp"

#include <cstdio>
#include <fstream>

namespace ecosim {

std::string format_number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string timeseries_csv(std::span<const StepStats> history) {
  std::string out =
      "t,mean_age,deaths,trades,w_food,w_mineral,total_money,gdp,"
      "mean_bid_food,mean_ask_food,mean_bid_mineral,mean_ask_mineral\n";
  for (const StepStats& s : history) {
    out += std::to_string(s.t);
    out += ',';
    out += format_number(s.mean_age);
    out += ',';
    out += std::to_string(s.deaths);
    out += ',';
    out += std::to_string(s.trades);
    out += ',';
    out += format_number(s.w_food);
    out += ',';
    out += format_number(s.w_mineral);
    out += ',';
    out += format_number(s.total_money);
    out += ',';
    out += format_number(s.gdp);
    out += ',';
    out += format_number(s.mean_bid_food);
    out += ',';
    out += format_number(s.mean_ask_food);
    out += ',';
    out += format_number(s.mean_bid_mineral);
    out += ',';
    out += format_number(s.mean_ask_mineral);
    out += '\n';
  }
  return out;
}

namespace {

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("failed writing: " + path);
}

}  // namespace

void write_timeseries_csv(std::span<const StepStats> history, const std::string& path) {
  write_text(timeseries_csv(history), path);
}

std::string summary_csv(std::span<const SummaryRow> rows) {
  std::string out =
      "cell,labor,price_regime,layout,contact_radius,n,mean_age,sd_age,"
      "sem_age,mean_food_price,sd_food_price\n";
  for (const SummaryRow& r : rows) {
    out += r.cell;
    out += ',';
    out += to_string(r.labor);
    out += ',';
    out += to_string(r.price_regime);
    out += ',';
    out += to_string(r.layout);
    out += ',';
    out += format_number(r.contact_radius);
    out += ',';
    out += std::to_string(r.age.n);
    out += ',';
    out += format_number(r.age.mean);
    out += ',';
    out += format_number(r.age.sd);
    out += ',';
    out += format_number(r.age.sem);
    out += ',';
    out += format_number(r.food_price.mean);
    out += ',';
    out += format_number(r.food_price.sd);
    out += '\n';
  }
  return out;
}

std::string tests_csv(std::span<const PairTest> tests) {
  std::string out = "cell_a,cell_b,t,p\n";
  for (const PairTest& t : tests) {
    out += t.cell_a;
    out += ',';
    out += t.cell_b;
    out += ',';
    out += format_number(t.result.t);
    out += ',';
    out += format_number(t.result.p);
    out += '\n';
  }
  return out;
}

void write_summary_csv(std::span<const SummaryRow> rows,
                       std::span<const PairTest> tests, const std::string& path) {
  if (rows.empty()) throw ConfigError("summary needs at least one row");
  write_text(summary_csv(rows), path);
  write_text(tests_csv(tests), path + ".tests.csv");
}

}  // namespace ecosim
