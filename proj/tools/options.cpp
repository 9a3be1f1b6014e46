#include "options.hpp"

#include <charconv>
#include <fstream>
#include <vector>

#include "CLI11.hpp"

namespace eads_cli {

namespace {

bool parse_double_strict(const std::string& text, double& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

// "LO:HI" -> two doubles
bool parse_bounds(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    return parse_double_strict(text.substr(0, colon), lo) &&
           parse_double_strict(text.substr(colon + 1), hi);
}

// "5,15" -> ids; empty string means no exclusions
bool parse_id_list(const std::string& text, std::vector<int32_t>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) return false;
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size()) return false;
        out.push_back(value);
        pos = comma + 1;
    }
    return true;
}

} // namespace

void add_common_options(CLI::App& app, CliOptions& opts) {
    app.add_option("--input", opts.input, "Sensor log file (IBRL text format)")
        ->required();
    app.add_option("--out", opts.out_dir, "Output directory")
        ->capture_default_str();
    app.add_option("--start", opts.start, "Analysis period start (inclusive)")
        ->capture_default_str();
    app.add_option("--end", opts.end, "Analysis period end (exclusive)")
        ->capture_default_str();
    app.add_option("--window-seconds", opts.window_seconds,
                   "Tumbling window width in seconds")
        ->capture_default_str();
    app.add_option("--temp-bounds", opts.temp_bounds,
                   "Temperature normal range LO:HI")
        ->capture_default_str();
    app.add_option("--hum-bounds", opts.hum_bounds,
                   "Humidity normal range LO:HI")
        ->capture_default_str();
    app.add_option("--exclude-nodes", opts.exclude_nodes,
                   "Comma-separated node ids to drop ('' for none)")
        ->capture_default_str();
    app.add_option("--tau", opts.tau, "Entropy decision threshold")
        ->capture_default_str();
    app.add_option("--combinator", opts.combinator,
                   "How the two entropies combine: and, or")
        ->check(CLI::IsMember({"and", "or"}))
        ->capture_default_str();
    app.add_option("--confidence", opts.confidence,
                   "Ellipse confidence level in (0,1)")
        ->capture_default_str();
    app.add_option("--log-base", opts.log_base, "Entropy logarithm base")
        ->capture_default_str();
    // consumed before full parsing; registered so it parses and documents
    app.add_option("--config", opts.config_path,
                   "key=value file with defaults (flags win)");
}

std::string find_config_argument(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return "";
}

bool apply_config_file(const std::string& path, CliOptions& opts,
                       std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open config file '" + path + "'";
        return false;
    }

    auto trim = [](std::string s) {
        const auto from = s.find_first_not_of(" \t\r");
        const auto to = s.find_last_not_of(" \t\r");
        return from == std::string::npos ? std::string()
                                         : s.substr(from, to - from + 1);
    };
    auto as_double = [&](const std::string& text, double& out) {
        auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), out);
        return ec == std::errc{} && ptr == text.data() + text.size();
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#' || trimmed[0] == ';') continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos) {
            error = path + ":" + std::to_string(line_no) + ": expected key=value";
            return false;
        }
        const std::string key = trim(trimmed.substr(0, eq));
        const std::string value = trim(trimmed.substr(eq + 1));

        bool ok = true;
        if (key == "input") opts.input = value;
        else if (key == "out") opts.out_dir = value;
        else if (key == "start") opts.start = value;
        else if (key == "end") opts.end = value;
        else if (key == "window-seconds") {
            auto [ptr, ec] = std::from_chars(
                value.data(), value.data() + value.size(), opts.window_seconds);
            ok = ec == std::errc{} && ptr == value.data() + value.size();
        } else if (key == "temp-bounds") opts.temp_bounds = value;
        else if (key == "hum-bounds") opts.hum_bounds = value;
        else if (key == "exclude-nodes") opts.exclude_nodes = value;
        else if (key == "tau") ok = as_double(value, opts.tau);
        else if (key == "combinator") opts.combinator = value;
        else if (key == "confidence") ok = as_double(value, opts.confidence);
        else if (key == "log-base") ok = as_double(value, opts.log_base);
        else {
            error = path + ":" + std::to_string(line_no) + ": unknown key '" +
                    key + "'";
            return false;
        }
        if (!ok) {
            error = path + ":" + std::to_string(line_no) +
                    ": cannot parse value for '" + key + "'";
            return false;
        }
    }
    return true;
}

ConfigHandle build_config(const CliOptions& opts, eads_status& status,
                          std::string& error) {
    ConfigHandle config(eads_config_new());
    if (!config) {
        status = EADS_EINTERNAL;
        error = "out of memory";
        return nullptr;
    }

    auto fail = [&](eads_status s, const std::string& message) {
        status = s;
        error = message;
        return ConfigHandle();
    };
    auto apply = [&](eads_status s) {
        if (s != EADS_OK) {
            status = s;
            error = eads_last_error();
        }
        return s == EADS_OK;
    };

    if (!apply(eads_config_set_period(config.get(), opts.start.c_str(),
                                      opts.end.c_str())))
        return nullptr;
    if (!apply(eads_config_set_window_seconds(config.get(), opts.window_seconds)))
        return nullptr;

    double lo = 0, hi = 0;
    if (!parse_bounds(opts.temp_bounds, lo, hi))
        return fail(EADS_EINVAL,
                    "--temp-bounds expects LO:HI, got '" + opts.temp_bounds + "'");
    if (!apply(eads_config_set_temperature_bounds(config.get(), lo, hi)))
        return nullptr;
    if (!parse_bounds(opts.hum_bounds, lo, hi))
        return fail(EADS_EINVAL,
                    "--hum-bounds expects LO:HI, got '" + opts.hum_bounds + "'");
    if (!apply(eads_config_set_humidity_bounds(config.get(), lo, hi)))
        return nullptr;

    std::vector<int32_t> excluded;
    if (!parse_id_list(opts.exclude_nodes, excluded))
        return fail(EADS_EINVAL, "--exclude-nodes expects a comma-separated "
                                 "id list, got '" + opts.exclude_nodes + "'");
    if (!apply(eads_config_set_excluded_nodes(config.get(), excluded.data(),
                                              excluded.size())))
        return nullptr;

    if (opts.combinator != "and" && opts.combinator != "or")
        return fail(EADS_EINVAL,
                    "--combinator expects 'and' or 'or', got '" +
                        opts.combinator + "'");
    if (!apply(eads_config_set_rule(config.get(), opts.tau,
                                    opts.combinator == "or"
                                        ? EADS_COMBINE_EITHER
                                        : EADS_COMBINE_BOTH)))
        return nullptr;
    if (!apply(eads_config_set_confidence(config.get(), opts.confidence)))
        return nullptr;
    if (!apply(eads_config_set_log_base(config.get(), opts.log_base)))
        return nullptr;

    status = EADS_OK;
    return config;
}

int exit_code_for(eads_status status) {
    switch (status) {
        case EADS_OK: return 0;
        case EADS_EINVAL: return 1;
        case EADS_EIO: return 2;
        case EADS_EDEGENERATE: return 3;
        case EADS_EEMPTY: return 1; // nothing analyzable is a setup problem
        case EADS_EINTERNAL: return 1;
    }
    return 1;
}

} // namespace eads_cli
