// Copyright 2026 The kgraph Authors.
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

#include "kgraph/tools/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "kgraph/artifacts.hpp"
#include "kgraph/collocations.hpp"
#include "kgraph/config.hpp"
#include "kgraph/corpus.hpp"
#include "kgraph/error.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/graph_io.hpp"
#include "kgraph/keywords.hpp"
#include "kgraph/overlap.hpp"
#include "kgraph/parallel.hpp"
#include "kgraph/relevance.hpp"
#include "kgraph/synthetic.hpp"
#include "kgraph/text.hpp"
#include "kgraph/vectors.hpp"

namespace kgraph::cli {

namespace {

namespace fs = std::filesystem;

class MissingInput : public std::runtime_error {
 public:
  explicit MissingInput(const fs::path& path)
      : std::runtime_error("missing input: " + path.string()) {}
};

fs::path require(const fs::path& path) {
  if (!fs::exists(path)) throw MissingInput(path);
  return path;
}

struct Globals {
  std::string config;
  std::string dir = ".";
  unsigned workers = 1;
  bool strict = false;
  std::string vectors;
  std::string stopwords;
};

class Context {
 public:
  Context(const Globals& g, PipelineConfig cfg, std::ostream& out, std::ostream& err)
      : g_(g), cfg_(std::move(cfg)), out_(out), err_(err) {}

  const PipelineConfig& cfg() const { return cfg_; }
  unsigned workers() const { return g_.workers; }
  bool strict() const { return g_.strict; }
  std::ostream& out() const { return out_; }
  std::ostream& err() const { return err_; }

  /// `flag` if given, otherwise `name` inside the artifact directory.
  fs::path at(const std::string& flag, const char* name) const {
    return flag.empty() ? fs::path(g_.dir) / name : fs::path(flag);
  }

  Normalizer normalizer() const {
    if (!cfg_.stopword_path) return Normalizer(StopwordSet::english(), cfg_.stemmer);
    return Normalizer(StopwordSet::from_file(require(*cfg_.stopword_path)), cfg_.stemmer);
  }

  VectorSpace space(std::span<const NormalizedDocument> ndocs) const {
    if (cfg_.vectors.kind == SpaceKind::External) {
      VectorLoadStats st;
      VectorSpace s = load_external_vectors(require(*cfg_.vectors.path), &st);
      if (st.duplicates > 0)
        err_ << "warning: " << st.duplicates << " repeated terms in " << *cfg_.vectors.path
             << "; the last row of each was kept\n";
      return s;
    }
    return VectorSpace::build_tfidf(ndocs);
  }

  void wrote(const fs::path& path, const std::string& what) const {
    out_ << "wrote " << what << " to " << path.string() << "\n";
  }

 private:
  const Globals& g_;
  PipelineConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

/// A command-line value that overrides a config field when given.
template <typename T>
struct Override {
  T value{};
  CLI::Option* opt = nullptr;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    opt = app->add_option(name, value, help);
  }
  void apply(T& target) const {
    if (opt != nullptr && opt->count() > 0) target = value;
  }
};

std::map<std::string, Domain> domains_of(const Corpus& corpus) {
  std::map<std::string, Domain> out;
  for (const auto& d : corpus) {
    if (d.domain) out.emplace(d.id, *d.domain);
  }
  return out;
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string format = "jsonl";
  std::string source = "other";
  std::string domain;
  std::string text_col = "text";
  std::string id_col;
  std::string domain_col;
  bool append = false;
  std::string out;
};

void add_ingest(CLI::App& app, IngestArgs& a) {
  auto* c = app.add_subcommand("ingest", "Read raw documents into corpus.jsonl");
  c->add_option("inputs", a.inputs, "Input files")->required();
  c->add_option("--format", a.format, "jsonl, csv or termlist")->capture_default_str();
  c->add_option("--source", a.source, "Provenance tag for records without one")
      ->capture_default_str();
  c->add_option("--domain", a.domain, "Domain for records without one");
  c->add_option("--text-col", a.text_col, "CSV column holding the text")->capture_default_str();
  c->add_option("--id-col", a.id_col, "CSV column holding the id");
  c->add_option("--domain-col", a.domain_col, "CSV column holding the domain");
  c->add_flag("--append", a.append, "Add to an existing corpus artifact");
  c->add_option("-o,--out", a.out, "Output corpus (default: <dir>/corpus.jsonl)");
}

int run_ingest(const Context& ctx, const IngestArgs& a) {
  IngestOptions opts;
  opts.format = parse_input_format(a.format);
  opts.source = parse_source(a.source);
  if (!a.domain.empty()) opts.domain = parse_domain(a.domain);
  opts.strict = ctx.strict();
  if (opts.format == InputFormat::Csv) {
    CsvColumns cols;
    cols.text = a.text_col;
    if (!a.id_col.empty()) cols.id = a.id_col;
    if (!a.domain_col.empty()) cols.domain = a.domain_col;
    opts.csv = cols;
  }
  const fs::path out = ctx.at(a.out, "corpus.jsonl");
  Corpus corpus;
  if (a.append && fs::exists(out)) corpus = read_corpus(out);

  std::size_t skipped = 0;
  for (const auto& input : a.inputs) {
    IngestResult r = ingest_into(std::move(corpus), require(input), opts);
    for (const auto& p : r.problems) ctx.err() << input << ": skipped " << p << "\n";
    skipped += r.skipped;
    corpus = std::move(r.corpus);
  }
  write_file(out, corpus_to_jsonl(corpus));
  ctx.wrote(out, std::to_string(corpus.size()) + " documents (" + std::to_string(skipped) +
                     " skipped)");
  return 0;
}

// ---- normalize ------------------------------------------------------------

struct NormalizeArgs {
  std::string corpus;
  std::string out;
  std::string collocations_out;
  Override<std::size_t> min_count;
  Override<double> min_pmi;
};

void add_normalize(CLI::App& app, NormalizeArgs& a) {
  auto* c = app.add_subcommand("normalize", "Tokenize, stem and merge collocations");
  c->add_option("--corpus", a.corpus, "Input corpus (default: <dir>/corpus.jsonl)");
  c->add_option("-o,--out", a.out, "Output (default: <dir>/normalized.jsonl)");
  c->add_option("--collocations-out", a.collocations_out,
                "Collocation model (default: <dir>/collocations.json)");
  a.min_count.add(c, "--min-count", "Collocation minimum count");
  a.min_pmi.add(c, "--min-pmi", "Collocation minimum PMI (nats)");
}

int run_normalize(const Context& ctx, const NormalizeArgs& a) {
  const Corpus corpus = read_corpus(require(ctx.at(a.corpus, "corpus.jsonl")));
  const Normalizer normalizer = ctx.normalizer();
  const auto& docs = corpus.documents();
  std::vector<NormalizedDocument> ndocs(docs.size());
  parallel_for(docs.size(), ctx.workers(),
               [&](std::size_t i) { ndocs[i] = normalizer.normalize(docs[i]); });

  const auto& cc = ctx.cfg().collocation;
  CollocationModel model;
  model.min_count = cc.min_count;
  model.min_pmi = cc.min_pmi;
  if (cc.enabled && !ndocs.empty()) {
    model = detect_collocations(ndocs, cc.min_count, cc.min_pmi);
    parallel_for(ndocs.size(), ctx.workers(),
                 [&](std::size_t i) { ndocs[i] = apply_collocations(ndocs[i], model); });
  }
  const fs::path out = ctx.at(a.out, "normalized.jsonl");
  const fs::path coll = ctx.at(a.collocations_out, "collocations.json");
  write_file(out, normalized_to_jsonl(ndocs));
  write_file(coll, collocations_to_json(model));
  ctx.wrote(out, std::to_string(ndocs.size()) + " normalized documents");
  ctx.wrote(coll, std::to_string(model.merges.size()) + " collocations");
  return 0;
}

// ---- keywords -------------------------------------------------------------

struct KeywordArgs {
  std::string normalized;
  std::string out;
};

void add_keywords(CLI::App& app, KeywordArgs& a) {
  auto* c = app.add_subcommand("keywords", "Extract ranked keywords per document");
  c->add_option("--normalized", a.normalized, "Input (default: <dir>/normalized.jsonl)");
  c->add_option("-o,--out", a.out, "Output (default: <dir>/keywords.jsonl)");
}

std::vector<DocKeywords> extract_all(std::span<const NormalizedDocument> ndocs,
                                     const KeywordOptions& opts, unsigned workers) {
  std::vector<DocKeywords> out(ndocs.size());
  parallel_for(ndocs.size(), workers, [&](std::size_t i) {
    out[i] = {ndocs[i].doc_id, extract_keywords(ndocs[i], opts)};
  });
  return out;
}

int run_keywords(const Context& ctx, const KeywordArgs& a) {
  const auto ndocs = read_normalized(require(ctx.at(a.normalized, "normalized.jsonl")));
  const auto kws = extract_all(ndocs, ctx.cfg().keyword, ctx.workers());
  const fs::path out = ctx.at(a.out, "keywords.jsonl");
  write_file(out, keywords_to_jsonl(kws));
  ctx.wrote(out, "keywords for " + std::to_string(kws.size()) + " documents");
  return 0;
}

// ---- filter ---------------------------------------------------------------

struct FilterArgs {
  std::string corpus;
  std::string normalized;
  std::string collocations;
  std::string thesaurus;
  std::string out;
  std::string normalized_out;
  std::string report;
};

void add_filter(CLI::App& app, FilterArgs& a) {
  auto* c = app.add_subcommand("filter", "Keep documents relevant to a thesaurus");
  c->add_option("--thesaurus", a.thesaurus, "Term list, one term per line")->required();
  c->add_option("--corpus", a.corpus, "Input corpus (default: <dir>/corpus.jsonl)");
  c->add_option("--normalized", a.normalized, "Its normalization (default: <dir>/normalized.jsonl)");
  c->add_option("--collocations", a.collocations,
                "Collocation model (default: <dir>/collocations.json)");
  c->add_option("-o,--out", a.out, "Kept corpus (default: <dir>/kept.jsonl)");
  c->add_option("--normalized-out", a.normalized_out,
                "Kept normalized documents (default: <dir>/kept_normalized.jsonl)");
  c->add_option("--report", a.report, "Per-document scores (default: <dir>/relevance.csv)");
}

int run_filter(const Context& ctx, const FilterArgs& a) {
  const Corpus corpus = read_corpus(require(ctx.at(a.corpus, "corpus.jsonl")));
  const auto ndocs = read_normalized(require(ctx.at(a.normalized, "normalized.jsonl")));
  const CollocationModel model =
      collocations_from_json(read_file(require(ctx.at(a.collocations, "collocations.json"))));

  IngestOptions topts;
  topts.format = InputFormat::Termlist;
  topts.source = Source::Thesaurus;
  topts.strict = ctx.strict();
  const Corpus terms_corpus = ingest(require(a.thesaurus), topts).corpus;
  std::vector<std::string> terms;
  for (const auto& d : terms_corpus) terms.push_back(d.text);
  const auto thesaurus = prepare_thesaurus(terms, ctx.normalizer(), &model);

  const VectorSpace space = ctx.space(ndocs);
  const FilterResult r = filter_corpus(corpus, ndocs, thesaurus, space, ctx.cfg().relevance,
                                       ctx.cfg().keyword, ctx.workers());

  std::vector<NormalizedDocument> kept_ndocs;
  for (const auto& nd : ndocs) {
    if (r.kept.contains(nd.doc_id)) kept_ndocs.push_back(nd);
  }
  const fs::path out = ctx.at(a.out, "kept.jsonl");
  const fs::path nout = ctx.at(a.normalized_out, "kept_normalized.jsonl");
  const fs::path report = ctx.at(a.report, "relevance.csv");
  write_file(out, corpus_to_jsonl(r.kept));
  write_file(nout, normalized_to_jsonl(kept_ndocs));
  write_file(report, relevance_report_csv(r.report));
  ctx.wrote(out, std::to_string(r.kept.size()) + " of " + std::to_string(corpus.size()) +
                     " documents");
  ctx.wrote(nout, "kept normalized documents");
  ctx.wrote(report, "relevance scores");
  return 0;
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
  std::string keywords;
  std::string normalized;
  std::string corpus;
  std::string graph;
  std::string out;
  bool no_similarity = false;
  Override<double> min_sim;
  Override<std::size_t> min_node_freq;
  Override<double> min_edge_weight;
  std::size_t top = 10;
  std::string format;
};

struct GraphCommands {
  CLI::App* build = nullptr;
  CLI::App* prune = nullptr;
  CLI::App* stats = nullptr;
  CLI::App* exporter = nullptr;
};

GraphCommands add_graph(CLI::App& app, GraphArgs& a) {
  auto* g = app.add_subcommand("graph", "Build and inspect the knowledge graph");
  g->require_subcommand(1);
  GraphCommands cmds;

  cmds.build = g->add_subcommand("build", "Nodes from keywords, co-occurrence and similarity edges");
  cmds.build->add_option("--keywords", a.keywords, "Keywords (default: <dir>/keywords.jsonl)");
  cmds.build->add_option("--normalized", a.normalized,
                         "Normalized documents (default: <dir>/normalized.jsonl)");
  cmds.build->add_option("--corpus", a.corpus, "Corpus for domains (default: <dir>/corpus.jsonl)");
  cmds.build->add_option("-o,--out", a.out, "Output (default: <dir>/graph.json)");
  cmds.build->add_flag("--no-similarity", a.no_similarity, "Skip similarity edges");
  a.min_sim.add(cmds.build, "--min-sim", "Similarity edge cutoff in (0, 1]");

  cmds.prune = g->add_subcommand("prune", "Drop rare nodes and weak edges");
  cmds.prune->add_option("--graph", a.graph, "Input (default: <dir>/graph.json)");
  cmds.prune->add_option("-o,--out", a.out, "Output (default: overwrite the input)");
  a.min_node_freq.add(cmds.prune, "--min-node-freq", "Minimum node frequency");
  a.min_edge_weight.add(cmds.prune, "--min-edge-weight", "Minimum edge weight");

  cmds.stats = g->add_subcommand("stats", "Print graph statistics");
  cmds.stats->add_option("--graph", a.graph, "Input (default: <dir>/graph.json)");
  cmds.stats->add_option("--top", a.top, "Heaviest edges listed per kind")->capture_default_str();

  cmds.exporter = g->add_subcommand("export", "Write the graph as GraphML, DOT or JSON");
  cmds.exporter->add_option("--graph", a.graph, "Input (default: <dir>/graph.json)");
  cmds.exporter->add_option("--format", a.format, "graphml, dot or json")->required();
  cmds.exporter->add_option("-o,--out", a.out, "Output file")->required();
  return cmds;
}

int run_graph_build(const Context& ctx, const GraphArgs& a) {
  const auto kws = read_keywords(require(ctx.at(a.keywords, "keywords.jsonl")));
  const auto ndocs = read_normalized(require(ctx.at(a.normalized, "normalized.jsonl")));
  const Corpus corpus = read_corpus(require(ctx.at(a.corpus, "corpus.jsonl")));

  std::map<std::string, std::vector<Keyword>> doc_keywords;
  for (const auto& d : kws) doc_keywords[d.doc_id] = d.keywords;

  BuildOptions opts;
  opts.min_sim = ctx.cfg().graph.min_sim;
  opts.similarity = ctx.cfg().graph.similarity_edges;
  opts.workers = ctx.workers();
  std::optional<VectorSpace> space;
  if (opts.similarity && !ndocs.empty()) space = ctx.space(ndocs);
  if (!space) opts.similarity = false;

  const KnowledgeGraph g = build_graph(doc_keywords, domains_of(corpus), ndocs,
                                       space ? &*space : nullptr, opts);
  const fs::path out = ctx.at(a.out, "graph.json");
  write_file(out, to_json(g));
  ctx.wrote(out, std::to_string(g.nodes.size()) + " nodes and " + std::to_string(g.edges.size()) +
                     " edges");
  return 0;
}

int run_graph_prune(const Context& ctx, const GraphArgs& a) {
  const fs::path in = require(ctx.at(a.graph, "graph.json"));
  const KnowledgeGraph g = prune(import_json(in), ctx.cfg().graph.min_node_freq,
                                 ctx.cfg().graph.min_edge_weight);
  const fs::path out = a.out.empty() ? in : fs::path(a.out);
  write_file(out, to_json(g));
  ctx.wrote(out, std::to_string(g.nodes.size()) + " nodes and " + std::to_string(g.edges.size()) +
                     " edges");
  return 0;
}

void print_stats(std::ostream& out, const KnowledgeGraph& g, std::size_t top) {
  const GraphStats s = stats(g, top);
  out << "nodes: " << s.node_count << "\n"
      << "edges: " << s.cooccurrence_edges << " co-occurrence, " << s.similarity_edges
      << " similarity\n"
      << "degree: min " << s.degree.min << ", median " << s.degree.median << ", max "
      << s.degree.max << "\n"
      << "components: " << s.components << "\n";
  if (!s.top_edges.empty()) out << "top edges:\n";
  for (const auto& e : s.top_edges) {
    out << "  " << to_string(e.kind) << "  " << e.a << " -- " << e.b << "  "
        << (e.kind == EdgeKind::Cooccurrence ? std::to_string(static_cast<long long>(e.weight))
                                             : fixed(e.weight))
        << "\n";
  }
}

int run_graph_stats(const Context& ctx, const GraphArgs& a) {
  print_stats(ctx.out(), import_json(require(ctx.at(a.graph, "graph.json"))), a.top);
  return 0;
}

int run_graph_export(const Context& ctx, const GraphArgs& a) {
  const GraphFormat format = parse_graph_format(a.format);
  const KnowledgeGraph g = import_json(require(ctx.at(a.graph, "graph.json")));
  export_graph(g, format, a.out);
  ctx.wrote(a.out, a.format);
  return 0;
}

// ---- cluster --------------------------------------------------------------

struct ClusterArgs {
  std::string corpus;
  std::string normalized;
  std::string out;
  std::string assignments;
  std::vector<std::string> domains;
};

void add_cluster(CLI::App& app, ClusterArgs& a) {
  auto* c = app.add_subcommand("cluster", "Two-domain overlap analysis with k-means");
  c->add_option("--corpus", a.corpus, "Corpus with domains (default: <dir>/corpus.jsonl)");
  c->add_option("--normalized", a.normalized, "Normalized documents (default: <dir>/normalized.jsonl)");
  c->add_option("-o,--out", a.out, "Report (default: <dir>/overlap.json)");
  c->add_option("--assignments", a.assignments, "Also write per-document clusters as CSV");
  c->add_option("--domains", a.domains, "The two domains to compare")
      ->delimiter(',')
      ->expected(2);
}

int run_cluster(const Context& ctx, const ClusterArgs& a) {
  const Corpus corpus = read_corpus(require(ctx.at(a.corpus, "corpus.jsonl")));
  const auto ndocs = read_normalized(require(ctx.at(a.normalized, "normalized.jsonl")));
  const auto domains = domains_of(corpus);

  Domain da{};
  Domain db{};
  if (!a.domains.empty()) {
    da = parse_domain(a.domains[0]);
    db = parse_domain(a.domains[1]);
    if (da == db) throw ParameterError("--domains needs two different domains");
  } else {
    std::set<Domain> present;
    for (const auto& [id, d] : domains) present.insert(d);
    if (present.size() != 2) {
      throw ParameterError("corpus has " + std::to_string(present.size()) +
                           " domains; choose two with --domains");
    }
    da = *present.begin();
    db = *std::next(present.begin());
  }

  std::vector<NormalizedDocument> group_a;
  std::vector<NormalizedDocument> group_b;
  for (const auto& nd : ndocs) {
    auto it = domains.find(nd.doc_id);
    if (it == domains.end()) continue;
    if (it->second == da) group_a.push_back(nd);
    else if (it->second == db) group_b.push_back(nd);
  }

  std::vector<NormalizedDocument> pooled = group_a;
  pooled.insert(pooled.end(), group_b.begin(), group_b.end());
  if (group_a.empty() || group_b.empty())
    throw ParameterError("both domains need at least one document");
  const VectorSpace space = ctx.space(pooled);

  const auto& cc = ctx.cfg().cluster;
  OverlapConfig oc;
  oc.kmeans.k = 2;
  oc.kmeans.seed = cc.seed;
  oc.kmeans.max_iter = cc.max_iter;
  oc.kmeans.tol = cc.tol;
  oc.kmeans.workers = ctx.workers();
  oc.homonym_ceiling = cc.homonym_ceiling;
  oc.homonym_min_count = cc.homonym_min_count;
  oc.label_a = std::string(to_string(da));
  oc.label_b = std::string(to_string(db));
  if (cc.k != 2) ctx.err() << "note: overlap analysis always uses k = 2\n";

  const OverlapReport r = overlap_report(group_a, group_b, space, oc);
  const fs::path out = ctx.at(a.out, "overlap.json");
  write_file(out, overlap_to_json(r));
  ctx.wrote(out, "overlap report (accuracy " + fixed(r.accuracy) + ")");
  if (!a.assignments.empty()) {
    write_file(a.assignments, assignments_to_csv(r));
    ctx.wrote(a.assignments, "cluster assignments");
  }
  return 0;
}

// ---- report ---------------------------------------------------------------

struct ReportArgs {
  std::string graph;
  std::string overlap;
};

void add_report(CLI::App& app, ReportArgs& a) {
  auto* c = app.add_subcommand("report", "Summarize the graph and the overlap analysis");
  c->add_option("--graph", a.graph, "Graph (default: <dir>/graph.json)");
  c->add_option("--overlap", a.overlap, "Overlap report (default: <dir>/overlap.json)");
}

int run_report(const Context& ctx, const ReportArgs& a) {
  const KnowledgeGraph g = import_json(require(ctx.at(a.graph, "graph.json")));
  const fs::path overlap = require(ctx.at(a.overlap, "overlap.json"));
  auto& out = ctx.out();
  out << "== graph ==\n";
  print_stats(out, g, 5);

  const OverlapReport r = overlap_from_json(read_file(overlap));
  out << "== overlap ==\n"
      << "documents: " << r.docs_a << " + " << r.docs_b << "\n"
      << "accuracy: " << fixed(r.accuracy) << "\n"
      << "purity: " << fixed(r.purity) << "\n"
      << "inertia: " << fixed(r.inertia) << " after " << r.iterations << " iterations\n"
      << "vocabulary jaccard: " << fixed(r.jaccard_vocab) << "\n"
      << "shared terms: " << r.shared_terms.size() << "\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.shared_terms.size(), 10); ++i) {
    const auto& s = r.shared_terms[i];
    out << "  " << s.term << "  " << s.count_a << " / " << s.count_b << "\n";
  }
  out << "homonym candidates: " << r.homonym_candidates.size() << "\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.homonym_candidates.size(), 10); ++i) {
    const auto& h = r.homonym_candidates[i];
    out << "  " << h.term << "  context cosine " << fixed(h.context_cosine) << "\n";
  }
  return 0;
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string out;
  TwoDomainSpec spec;
};

void add_synth(CLI::App& app, SynthArgs& a) {
  auto* c = app.add_subcommand("synth", "Write the synthetic two-domain corpus as JSONL");
  c->add_option("-o,--out", a.out, "Output (default: <dir>/synthetic.jsonl)");
  c->add_option("--seed", a.spec.seed, "Generator seed")->capture_default_str();
  c->add_option("--docs-per-domain", a.spec.docs_per_domain, "Documents per domain")
      ->capture_default_str();
  c->add_option("--vocabulary", a.spec.vocabulary_size, "Words per domain")->capture_default_str();
  c->add_option("--shared-fraction", a.spec.shared_fraction, "Fraction of words shared")
      ->capture_default_str();
}

int run_synth(const Context& ctx, const SynthArgs& a) {
  const TwoDomainCorpus tc = generate_two_domain(a.spec);
  Corpus all = tc.a;
  for (const auto& d : tc.b) all.add(d);
  const fs::path out = ctx.at(a.out, "synthetic.jsonl");
  write_file(out, corpus_to_jsonl(all));
  ctx.wrote(out, std::to_string(all.size()) + " documents");
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knowledge graph construction from scientific text", "kgraph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Globals g;
  app.add_option("--config", g.config, "JSON pipeline configuration");
  app.add_option("--dir", g.dir, "Artifact directory")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--strict", g.strict, "Abort on the first malformed input record");
  app.add_option("--vectors", g.vectors, "External token-vector file");
  app.add_option("--stopwords", g.stopwords, "Stopword list replacing the bundled one");

  // Config overrides shared by several subcommands are global.
  Override<std::size_t> top_k, max_ngram, window, rel_top_k, seed, max_iter;
  Override<double> dedup, threshold;
  Override<std::string> aggregation;
  top_k.add(&app, "--top-k", "Keywords kept per document");
  max_ngram.add(&app, "--max-ngram", "Longest keyword in tokens");
  window.add(&app, "--window", "Co-occurrence window for keyword features");
  dedup.add(&app, "--dedup-threshold", "Near-duplicate keyword similarity cutoff");
  rel_top_k.add(&app, "--relevance-top-k", "Keywords scored per document when filtering");
  threshold.add(&app, "--threshold", "Relevance cutoff in [0, 1]");
  aggregation.add(&app, "--aggregation", "max-max or mean-of-max");
  seed.add(&app, "--seed", "k-means seed");
  max_iter.add(&app, "--max-iter", "k-means iteration cap");

  IngestArgs ingest_args;
  NormalizeArgs normalize_args;
  KeywordArgs keyword_args;
  FilterArgs filter_args;
  GraphArgs graph_args;
  ClusterArgs cluster_args;
  ReportArgs report_args;
  SynthArgs synth_args;
  add_ingest(app, ingest_args);
  add_normalize(app, normalize_args);
  add_keywords(app, keyword_args);
  add_filter(app, filter_args);
  const GraphCommands graph_cmds = add_graph(app, graph_args);
  add_cluster(app, cluster_args);
  add_report(app, report_args);
  add_synth(app, synth_args);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    PipelineConfig cfg;
    if (!g.config.empty()) cfg = load_config(require(g.config));
    if (!g.stopwords.empty()) cfg.stopword_path = g.stopwords;
    if (!g.vectors.empty()) {
      cfg.vectors.kind = SpaceKind::External;
      cfg.vectors.path = g.vectors;
    }
    top_k.apply(cfg.keyword.top_k);
    max_ngram.apply(cfg.keyword.max_ngram);
    window.apply(cfg.keyword.window);
    dedup.apply(cfg.keyword.dedup_threshold);
    rel_top_k.apply(cfg.relevance.top_k);
    threshold.apply(cfg.relevance.threshold);
    if (aggregation.opt->count() > 0) {
      try {
        cfg.relevance.aggregation = parse_aggregation(aggregation.value);
      } catch (const Error& e) {
        throw ConfigError("relevance.aggregation", e.what());
      }
    }
    seed.apply(cfg.cluster.seed);
    max_iter.apply(cfg.cluster.max_iter);
    normalize_args.min_count.apply(cfg.collocation.min_count);
    normalize_args.min_pmi.apply(cfg.collocation.min_pmi);
    graph_args.min_sim.apply(cfg.graph.min_sim);
    if (graph_args.no_similarity) cfg.graph.similarity_edges = false;
    graph_args.min_node_freq.apply(cfg.graph.min_node_freq);
    graph_args.min_edge_weight.apply(cfg.graph.min_edge_weight);
    validate(cfg);

    const Context ctx(g, std::move(cfg), out, err);
    if (app.got_subcommand("ingest")) return run_ingest(ctx, ingest_args);
    if (app.got_subcommand("normalize")) return run_normalize(ctx, normalize_args);
    if (app.got_subcommand("keywords")) return run_keywords(ctx, keyword_args);
    if (app.got_subcommand("filter")) return run_filter(ctx, filter_args);
    if (app.got_subcommand("cluster")) return run_cluster(ctx, cluster_args);
    if (app.got_subcommand("report")) return run_report(ctx, report_args);
    if (app.got_subcommand("synth")) return run_synth(ctx, synth_args);
    if (graph_cmds.build->parsed()) return run_graph_build(ctx, graph_args);
    if (graph_cmds.prune->parsed()) return run_graph_prune(ctx, graph_args);
    if (graph_cmds.stats->parsed()) return run_graph_stats(ctx, graph_args);
    if (graph_cmds.exporter->parsed()) return run_graph_export(ctx, graph_args);
    err << "error: no subcommand\n";
    return 1;
  } catch (const MissingInput& e) {
    err << "error: " << e.what() << "\n";
    return kMissingInput;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kgraph::cli
