// Copyright 2026 The RRPS Arena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rrps/pbe/cross_table.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rrps/engine/seeding.h"
#include "rrps/pbe/parallel.h"
#include "rrps/pbe/ranking.h"

namespace rrps::pbe {

void CrossTableConfig::Validate() const {
  if (episodes_per_cell < 1) {
    throw std::invalid_argument("episodes per cell must be >= 1");
  }
  episode.Validate();
}

CrossTable ComputeCrossTable(const bots::Population& pop,
                             const CrossTableConfig& config,
                             const MatchSink& sink) {
  config.Validate();
  const int n = pop.size();
  CrossTable t;
  t.names = pop.names();
  t.mean.assign(n, std::vector<double>(n, 0.0));
  t.se.assign(n, std::vector<double>(n, 0.0));
  t.episodes_per_cell = config.episodes_per_cell;
  t.seed = config.seed;

  // Row by row so that match records can be flushed in canonical order
  // without holding the whole run in memory.
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<MatchRecord>> logs(sink ? n : 0);
    ParallelFor(n, config.workers, [&](int j) {
      std::unique_ptr<Agent> row = pop.MakeBot(i);
      std::unique_ptr<Agent> col = pop.MakeBot(j);
      std::vector<int> returns(config.episodes_per_cell);
      for (int e = 0; e < config.episodes_per_cell; ++e) {
        const std::uint64_t seed = DeriveEpisodeSeed(config.seed, i, j, e);
        const EpisodeResult r = PlayEpisode(*row, *col, config.episode, seed);
        returns[e] = r.return0;
        if (sink) {
          logs[j].push_back(MatchRecord::FromEpisode(pop.spec(i).id,
                                                     pop.spec(j).id, e, seed, r));
        }
      }
      const Estimate est = MeanAndError(returns);
      t.mean[i][j] = est.mean;
      t.se[i][j] = est.se;
    });
    if (sink) {
      for (const auto& cell : logs) sink(cell);
    }
  }
  return t;
}

std::vector<MetricsRecord> MetricsFromCrossTable(const CrossTable& t) {
  const int n = t.size();
  std::vector<MetricsRecord> out;
  for (int i = 0; i < n; ++i) {
    MetricsRecord r;
    r.agent = t.names[i];
    r.episodes_per_bot = t.episodes_per_cell;
    double var = 0.0;
    int worst = 0;
    for (int j = 0; j < n; ++j) {
      r.per_bot.push_back(t.mean[i][j]);
      r.pop_return.mean += t.mean[i][j];
      var += t.se[i][j] * t.se[i][j];
      if (t.mean[j][i] > t.mean[worst][i]) worst = j;
    }
    r.pop_return.mean /= n;
    r.pop_return.se = std::sqrt(var) / n;
    r.wp_expl = {t.mean[worst][i], t.se[worst][i]};
    r.wp_expl_bot = t.names[worst];
    FinishRecord(r);
    out.push_back(std::move(r));
  }
  return out;
}

void WriteCrossTableCsv(std::ostream& os, const CrossTable& t) {
  os << "bot";
  for (const std::string& name : t.names) os << ',' << name;
  os << '\n';
  for (int i = 0; i < t.size(); ++i) {
    os << t.names[i];
    for (int j = 0; j < t.size(); ++j) os << ',' << FormatMean(t.mean[i][j]);
    os << '\n';
  }
}

namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

CrossTable ReadCrossTableCsv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty cross-table");
  auto header = SplitCsvLine(line);
  if (header.size() < 2 || header[0] != "bot") {
    throw std::invalid_argument("cross-table header must start with 'bot'");
  }
  CrossTable t;
  t.names.assign(header.begin() + 1, header.end());
  const int n = t.size();
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = SplitCsvLine(line);
    const int i = static_cast<int>(t.mean.size());
    if (static_cast<int>(fields.size()) != n + 1 || i >= n ||
        fields[0] != t.names[i]) {
      throw std::invalid_argument("malformed cross-table row " +
                                  std::to_string(i + 1));
    }
    std::vector<double> row;
    for (int j = 1; j <= n; ++j) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(fields[j], &used));
        if (used != fields[j].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + fields[j] + "'");
      }
    }
    t.mean.push_back(std::move(row));
  }
  if (static_cast<int>(t.mean.size()) != n) {
    throw std::invalid_argument("cross-table is not square");
  }
  t.se.assign(n, std::vector<double>(n, 0.0));
  return t;
}

}  // namespace rrps::pbe
