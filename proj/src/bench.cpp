#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sst/script.hpp"

namespace sst {

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> read_queries(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_bytes(line));
  }
  return out;
}

struct QueryRow {
  StreamPos checkpoint = 0;
  std::string query;
  std::size_t occ = 0;
  QueryCounters counters;
  double ratio = 0;
  double index_us = 0;
  double rescan_us = 0;
  double rebuild_us = 0;
  bool agree = true;
};

std::string shorten(const std::string& q) {
  std::string e = escape_bytes(q);
  return e.size() > 18 ? e.substr(0, 15) + "..." : e;
}

}  // namespace

void run_bench(const BenchConfig& config, std::ostream& out) {
  if (config.window == 0) throw std::invalid_argument("window must be >= 1");
  const std::string corpus = read_file(config.corpus_path);
  const std::vector<std::string> queries = read_queries(config.queries_path);

  const std::size_t checkpoints = std::max<std::size_t>(config.checkpoints, 1);
  std::vector<std::size_t> marks;
  for (std::size_t k = 1; k <= checkpoints; ++k) {
    const std::size_t m = corpus.size() * k / checkpoints;
    if (m > 0 && (marks.empty() || marks.back() != m)) marks.push_back(m);
  }

  SlidingSuffixTree index(config.window);
  std::vector<QueryRow> rows;
  double feed_us = 0;
  std::size_t fed = 0;
  for (std::size_t mark : marks) {
    const auto t0 = Clock::now();
    for (; fed < mark; ++fed) index.shift(static_cast<unsigned char>(corpus[fed]));
    feed_us += micros_since(t0);

    const WindowBuffer& w = index.window();
    for (const std::string& q : queries) {
      QueryRow row;
      row.checkpoint = w.n();
      row.query = q;

      auto t = Clock::now();
      const QueryResult r = index.find(q);
      row.index_us = micros_since(t);
      row.occ = r.positions.size();
      row.counters = r.counters;
      row.ratio = static_cast<double>(r.counters.total()) / static_cast<double>(q.size() + row.occ + 1);

      t = Clock::now();
      const auto scanned = linear_match(w, w.start(), w.n(), q);
      row.rescan_us = micros_since(t);

      t = Clock::now();
      SlidingSuffixTree rebuilt(config.window);
      for (StreamPos p = w.start(); p < w.n(); ++p) rebuilt.shift(w.char_at(p));
      const QueryResult rr = rebuilt.find(q);
      row.rebuild_us = micros_since(t);

      std::vector<StreamPos> shifted;
      for (StreamPos p : rr.positions) shifted.push_back(p + w.start());
      row.agree = scanned == r.positions && shifted == r.positions;
      rows.push_back(std::move(row));
    }
  }

  const WorkCounters work = index.work();
  const double shifts = static_cast<double>(std::max<std::size_t>(fed, 1));
  const double structural = static_cast<double>(work.structural()) / shifts;
  const double automaton = static_cast<double>(work.automaton()) / shifts;
  const double relabels = static_cast<double>(work.order_relabels) / shifts;

  out << "corpus_bytes " << corpus.size() << "  window " << config.window << "  queries "
      << queries.size() << "  checkpoints " << marks.size() << '\n';
  out << std::fixed << std::setprecision(3);
  out << "feed_seconds " << feed_us / 1e6 << "  structural_ops/shift " << structural
      << "  automaton_ops/shift " << automaton << "  order_relabels/shift " << relabels
      << "  rep_fallbacks " << work.rep_fallbacks << '\n';

  out << std::left << std::setw(12) << "checkpoint" << std::setw(20) << "query" << std::right
      << std::setw(10) << "occ" << std::setw(10) << "ratio" << std::setw(14) << "index_us"
      << std::setw(14) << "rescan_us" << std::setw(14) << "rebuild_us" << std::setw(7) << "agree"
      << '\n';
  double index_total = 0, rescan_total = 0, rebuild_total = 0, max_ratio = 0;
  for (const auto& r : rows) {
    out << std::left << std::setw(12) << r.checkpoint << std::setw(20) << shorten(r.query)
        << std::right << std::setw(10) << r.occ << std::setw(10) << r.ratio << std::setw(14)
        << r.index_us << std::setw(14) << r.rescan_us << std::setw(14) << r.rebuild_us
        << std::setw(7) << (r.agree ? "yes" : "NO") << '\n';
    index_total += r.index_us;
    rescan_total += r.rescan_us;
    rebuild_total += r.rebuild_us;
    max_ratio = std::max(max_ratio, r.ratio);
  }
  if (!rows.empty()) {
    out << "totals_us index " << index_total << "  rescan " << rescan_total << "  rebuild "
        << rebuild_total << "  max_ratio " << max_ratio << '\n';
  }

  if (config.csv_path) {
    std::ofstream csv(*config.csv_path);
    if (!csv) throw std::runtime_error("cannot write " + *config.csv_path);
    csv << std::fixed << std::setprecision(3);
    csv << "kind,checkpoint,query,qlen,occ,visited_nodes,link_checks,scan_chars,ratio,"
           "index_us,rescan_us,rebuild_us,agree,shifts,structural_per_shift,"
           "automaton_per_shift,feed_seconds\n";
    csv << "feed,,,,,,,,,,,,," << fed << ',' << structural << ',' << automaton << ','
        << feed_us / 1e6 << '\n';
    for (const auto& r : rows) {
      std::string q = escape_bytes(r.query);
      if (q.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : q) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        q = quoted + "\"";
      }
      csv << "query," << r.checkpoint << ',' << q << ',' << r.query.size() << ',' << r.occ << ','
          << r.counters.visited_nodes << ',' << r.counters.link_checks << ','
          << r.counters.scan_chars << ',' << r.ratio << ',' << r.index_us << ',' << r.rescan_us
          << ',' << r.rebuild_us << ',' << (r.agree ? 1 : 0) << ",,,,\n";
    }
  }
}

}  // namespace sst
