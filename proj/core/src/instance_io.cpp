#include "drsop/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "drsop/errors.hpp"

namespace drsop {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::int64_t parse_int(const Line& line, const std::string& token,
                       const char* what) {
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line.number, std::string("malformed ") + what + " '" + token + "'");
    return value;
}

std::vector<Level> parse_levels(const Line& line, std::size_t from, std::size_t d,
                                const std::string& owner) {
    if (line.tokens.size() - from != d)
        throw ParseError(line.number,
                         owner + " has " + std::to_string(line.tokens.size() - from) +
                             " resource levels, expected " + std::to_string(d));
    std::vector<Level> levels;
    levels.reserve(d);
    for (std::size_t i = from; i < line.tokens.size(); ++i) {
        const Level v = parse_int(line, line.tokens[i], "resource level");
        if (v < 0)
            throw ParseError(line.number, owner + " has a negative resource level");
        levels.push_back(v);
    }
    return levels;
}

std::string csv_field(const std::string& value, const char* what) {
    if (value.find(',') != std::string::npos || value.find('\n') != std::string::npos)
        throw InputError(std::string(what) + " must not contain ',' or newlines: '" + value + "'");
    return value;
}

constexpr std::string_view kReportHeader =
    "scenario,strategy,seed,best_cost,stable,restarts,candidates_examined,"
    "unique_candidates,feasibility_checks,cache_hits,wall_ms,incomplete";

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(pos));
            return fields;
        }
        fields.emplace_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

} // namespace

ProblemSpace parse_instance(std::string_view text) {
    ResourceKindList kinds;
    std::vector<NodeSpec> nodes;
    std::vector<ServiceSpec> services;
    std::unordered_map<std::string, int> node_lines;
    std::unordered_map<std::string, int> service_lines;
    bool saw_resources = false;

    for (const Line& line : tokenize(text)) {
        const std::string& kw = line.tokens[0];
        if (kw == "resources") {
            if (saw_resources)
                throw ParseError(line.number, "duplicate resources declaration");
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "resources needs at least one kind");
            std::unordered_set<std::string> seen;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                if (!seen.insert(line.tokens[i]).second)
                    throw ParseError(line.number,
                                     "duplicate resource kind '" + line.tokens[i] + "'");
                kinds.kinds.push_back(line.tokens[i]);
            }
            saw_resources = true;
            continue;
        }
        if (!saw_resources)
            throw ParseError(line.number,
                             "expected a resources declaration before '" + kw + "'");

        if (kw == "node") {
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "node needs an id");
            const std::string& id = line.tokens[1];
            if (auto it = node_lines.find(id); it != node_lines.end())
                throw ParseError(line.number, "duplicate node id '" + id +
                                                  "' (first on line " +
                                                  std::to_string(it->second) + ")");
            node_lines.emplace(id, line.number);
            nodes.push_back(
                {id, ResourceVector{parse_levels(line, 2, kinds.size(), "node '" + id + "'")}});
        } else if (kw == "service") {
            if (line.tokens.size() < 4)
                throw ParseError(line.number,
                                 "service needs an id, an initial node and a cost");
            const std::string& id = line.tokens[1];
            if (auto it = service_lines.find(id); it != service_lines.end())
                throw ParseError(line.number, "duplicate service id '" + id +
                                                  "' (first on line " +
                                                  std::to_string(it->second) + ")");
            service_lines.emplace(id, line.number);
            const Cost cost = parse_int(line, line.tokens[3], "migration cost");
            if (cost < 0)
                throw ParseError(line.number,
                                 "service '" + id + "' has a negative migration cost");
            services.push_back({id, line.tokens[2], cost,
                                ResourceVector{parse_levels(line, 4, kinds.size(),
                                                            "service '" + id + "'")}});
        } else {
            throw ParseError(line.number, "unknown directive '" + kw + "'");
        }
    }

    if (!saw_resources) throw ParseError(1, "document has no resources declaration");
    return ProblemSpace(std::move(kinds), std::move(nodes), std::move(services));
}

std::string write_instance(const ProblemSpace& space) {
    std::ostringstream out;
    out << "resources";
    for (const auto& k : space.kinds().kinds) out << ' ' << k;
    out << '\n';
    for (const auto& n : space.nodes()) {
        out << "node " << n.id;
        for (Level v : n.available.levels) out << ' ' << v;
        out << '\n';
    }
    for (const auto& s : space.services()) {
        out << "service " << s.id << ' ' << s.initial_node << ' ' << s.migration_cost;
        for (Level v : s.required.levels) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::vector<ScenarioSpec> parse_scenarios(std::string_view text) {
    std::vector<ScenarioSpec> out;
    ScenarioSpec* current = nullptr;
    int current_line = 0;

    auto finish = [&](const ScenarioSpec& sc) {
        if (sc.first_service > sc.last_service || (sc.first_service == 0 && sc.last_service == 0))
            throw ParseError(current_line, "scenario '" + sc.name + "' needs a services range");
        if (sc.enabled_nodes.empty())
            throw ParseError(current_line, "scenario '" + sc.name + "' has an empty node list");
        if (sc.budget_ms <= 0)
            throw ParseError(current_line, "scenario '" + sc.name + "' needs budget_ms > 0");
    };

    for (const Line& line : tokenize(text)) {
        const std::string& kw = line.tokens[0];
        if (kw == "scenario") {
            if (current) finish(*current);
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "scenario needs a name");
            ScenarioSpec sc;
            sc.name = line.tokens[1];
            for (std::size_t i = 2; i < line.tokens.size(); ++i) sc.name += " " + line.tokens[i];
            out.push_back(std::move(sc));
            current = &out.back();
            current_line = line.number;
            continue;
        }
        if (!current)
            throw ParseError(line.number, "expected 'scenario <name>' before '" + kw + "'");

        if (kw == "services") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "services expects one <first>..<last> range");
            const std::string& range = line.tokens[1];
            const std::size_t dots = range.find("..");
            if (dots == std::string::npos)
                throw ParseError(line.number, "malformed service range '" + range + "'");
            current->first_service =
                parse_int(line, range.substr(0, dots), "service range bound");
            current->last_service =
                parse_int(line, range.substr(dots + 2), "service range bound");
            if (current->first_service > current->last_service)
                throw ParseError(line.number, "empty service range '" + range + "'");
        } else if (kw == "nodes") {
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "nodes needs at least one id");
            current->enabled_nodes.assign(line.tokens.begin() + 1, line.tokens.end());
        } else if (kw == "budget_ms") {
            if (line.tokens.size() != 2)
                throw ParseError(line.number, "budget_ms expects one integer");
            current->budget_ms = parse_int(line, line.tokens[1], "budget");
            if (current->budget_ms <= 0)
                throw ParseError(line.number, "budget_ms must be positive");
        } else if (kw == "strategies") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const auto s = strategy_from_string(line.tokens[i]);
                if (!s)
                    throw ParseError(line.number,
                                     "unknown strategy id '" + line.tokens[i] + "'");
                current->strategies.push_back(*s);
            }
            if (current->strategies.empty())
                throw ParseError(line.number, "strategies needs at least one id");
        } else if (kw == "seeds") {
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const std::int64_t v = parse_int(line, line.tokens[i], "seed");
                if (v < 0) throw ParseError(line.number, "seeds must be non-negative");
                current->seeds.push_back(static_cast<std::uint64_t>(v));
            }
            if (current->seeds.empty())
                throw ParseError(line.number, "seeds needs at least one value");
        } else {
            throw ParseError(line.number, "unknown directive '" + kw + "'");
        }
    }
    if (current) finish(*current);

    for (ScenarioSpec& sc : out) {
        if (sc.strategies.empty())
            sc.strategies.assign(kHeuristicStrategies.begin(), kHeuristicStrategies.end());
        if (sc.seeds.empty())
            for (std::uint64_t s = 1; s <= 20; ++s) sc.seeds.push_back(s);
    }
    return out;
}

ScenarioSpec parse_scenario(std::string_view text) {
    auto all = parse_scenarios(text);
    if (all.size() != 1)
        throw InputError("expected exactly one scenario, found " + std::to_string(all.size()));
    return std::move(all.front());
}

std::string write_scenarios(std::span<const ScenarioSpec> scenarios) {
    std::ostringstream out;
    for (const auto& sc : scenarios) {
        out << "scenario " << sc.name << '\n';
        out << "services " << sc.first_service << ".." << sc.last_service << '\n';
        out << "nodes";
        for (const auto& n : sc.enabled_nodes) out << ' ' << n;
        out << '\n';
        out << "budget_ms " << sc.budget_ms << '\n';
        out << "strategies";
        for (Strategy s : sc.strategies) out << ' ' << to_string(s);
        out << '\n';
        out << "seeds";
        for (std::uint64_t s : sc.seeds) out << ' ' << s;
        out << "\n\n";
    }
    return out.str();
}

std::string write_report(std::span<const RunReport> rows) {
    std::ostringstream out;
    out << kReportHeader << '\n';
    for (const auto& r : rows) {
        if (r.unique_candidates > r.candidates_examined)
            throw InputError("report row has unique_candidates > candidates_examined");
        if (r.cache_hits != r.candidates_examined - r.feasibility_checks)
            throw InputError("report row violates cache_hits = examined - feasibility_checks");
        out << csv_field(r.scenario, "scenario name") << ',' << to_string(r.strategy) << ','
            << r.seed << ',';
        if (r.best_cost)
            out << *r.best_cost;
        else
            out << "none";
        out << ',' << (r.stable ? 1 : 0) << ',' << r.restarts << ',' << r.candidates_examined
            << ',' << r.unique_candidates << ',' << r.feasibility_checks << ',' << r.cache_hits
            << ',' << r.wall_ms << ',' << (r.incomplete ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<RunReport> parse_report(std::string_view csv) {
    std::vector<RunReport> rows;
    std::size_t pos = 0;
    int number = 0;
    while (pos < csv.size()) {
        const std::size_t eol = csv.find('\n', pos);
        std::string_view raw =
            csv.substr(pos, eol == std::string_view::npos ? csv.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? csv.size() : eol + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (raw.empty()) continue;
        if (number == 1) {
            if (raw != kReportHeader) throw ParseError(1, "unexpected report header");
            continue;
        }
        const auto fields = split_csv(raw);
        if (fields.size() != 12)
            throw ParseError(number, "expected 12 fields, found " + std::to_string(fields.size()));
        Line fake{number, fields};
        RunReport r;
        r.scenario = fields[0];
        const auto strat = strategy_from_string(fields[1]);
        if (!strat) throw ParseError(number, "unknown strategy id '" + fields[1] + "'");
        r.strategy = *strat;
        r.seed = static_cast<std::uint64_t>(parse_int(fake, fields[2], "seed"));
        if (fields[3] != "none") r.best_cost = parse_int(fake, fields[3], "best_cost");
        r.stable = parse_int(fake, fields[4], "stable flag") != 0;
        r.restarts = parse_int(fake, fields[5], "restarts");
        r.candidates_examined = parse_int(fake, fields[6], "candidates_examined");
        r.unique_candidates = parse_int(fake, fields[7], "unique_candidates");
        r.feasibility_checks = parse_int(fake, fields[8], "feasibility_checks");
        r.cache_hits = parse_int(fake, fields[9], "cache_hits");
        r.wall_ms = parse_int(fake, fields[10], "wall_ms");
        r.incomplete = parse_int(fake, fields[11], "incomplete flag") != 0;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string write_assignment(const ProblemSpace& space, const Assignment& mu) {
    std::ostringstream out;
    for (const auto& [service, node] : assignment_to_pairs(space, mu))
        out << service << ' ' << node << '\n';
    return out.str();
}

Assignment parse_assignment(const ProblemSpace& space, std::string_view text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected '<service-id> <node-id>'");
        pairs.emplace_back(line.tokens[0], line.tokens[1]);
    }
    return assignment_from_pairs(space, pairs);
}

} // namespace drsop
