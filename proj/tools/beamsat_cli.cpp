// SPDX-License-Identifier: Apache-2.0
//
// beamsat: multi-user mmWave beam steering simulation and analytic SE bounds
// Copyright (C) 2026 The beamsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line experiment runner: parameter sweeps, closed-form bounds and
// validation of the simulated gaps, all emitted as CSV.

#include "beamsat/beamsat.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_validation_failed = 2;

struct Options
{
    std::string config_file;
    std::string preset;
    std::string out;
    std::map<std::string, std::string> flags; // key -> raw value, applied last
    bool no_bounds = false;
};

void add_common_options(CLI::App *cmd, Options &opt, bool allow_preset)
{
    cmd->add_option("--config", opt.config_file, "key=value settings file (flags override it)");
    if (allow_preset)
        cmd->add_option("--preset", opt.preset, "start from a built-in figure configuration")
            ->check(CLI::IsMember({"figure1", "figure2", "figure3", "figure4"}));
    struct Flag
    {
        const char *name;
        const char *key;
        const char *help;
    };
    static const Flag flags[] = {
        {"--ntx", "ntx", "transmit antenna counts, comma list"},
        {"--nbeams", "nbeams", "beams / users / RF chains, comma list"},
        {"--snr-db", "snr_db", "SNR grid in dB: comma list or start:step:stop"},
        {"--trials", "trials", "Monte Carlo realizations per point"},
        {"--seed", "seed", "master seed"},
        {"--spacing", "spacing", "element spacing in wavelengths"},
        {"--schemes", "schemes", "comma list of ABS, HBS, NoInterference"},
        {"--threads", "threads", "worker threads (results do not depend on it)"},
    };
    for (const Flag &f : flags)
    {
        const std::string key = f.key;
        cmd->add_option_function<std::string>(
            f.name, [&opt, key](const std::string &v) { opt.flags[key] = v; }, f.help);
    }
    cmd->add_flag("--no-bounds", opt.no_bounds, "skip closed-form bound rows");
    cmd->add_option("--out", opt.out, "CSV output path (default: standard output)");
}

beamsat::ExperimentConfig build_config(const Options &opt, const std::string &fixed_preset)
{
    const std::string preset_name = fixed_preset.empty() ? opt.preset : fixed_preset;
    beamsat::ExperimentConfig config;
    if (!preset_name.empty())
        config = *beamsat::preset(preset_name);
    if (!opt.config_file.empty())
    {
        std::ifstream in(opt.config_file);
        if (!in)
            throw beamsat::ParameterError("cannot open config file '" + opt.config_file + "'");
        for (const auto &[key, value] : beamsat::read_settings(in))
            beamsat::apply_setting(config, key, value);
    }
    for (const auto &[key, value] : opt.flags)
        beamsat::apply_setting(config, key, value);
    if (opt.no_bounds)
        config.bounds = false;
    config.check();
    return config;
}

void emit_csv(const Options &opt, const std::vector<beamsat::ResultRow> &rows)
{
    if (opt.out.empty())
    {
        beamsat::write_csv(std::cout, rows);
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out)
        throw beamsat::ParameterError("cannot open output file '" + opt.out + "'");
    beamsat::write_csv(out, rows);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Multi-user mmWave beam steering: Monte Carlo spectral efficiency and closed-form bounds"};
    app.require_subcommand(1);

    Options opt;
    auto *sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep and write CSV");
    add_common_options(sweep, opt, true);
    auto *validate = app.add_subcommand("validate", "run a sweep and check the gaps against the reference values");
    add_common_options(validate, opt, true);
    auto *bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds only");
    add_common_options(bounds, opt, true);
    std::vector<std::pair<std::string, CLI::App *>> figures;
    for (int i = 1; i <= 4; ++i)
    {
        const std::string name = "figure" + std::to_string(i);
        auto *cmd = app.add_subcommand(name, "run the " + name + " preset and write CSV");
        add_common_options(cmd, opt, false);
        figures.emplace_back(name, cmd);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*bounds)
        {
            emit_csv(opt, beamsat::bounds_only(build_config(opt, {})));
            return exit_ok;
        }
        if (*validate)
        {
            const auto report = beamsat::validate(build_config(opt, {}));
            if (!opt.out.empty())
                emit_csv(opt, report.rows);
            beamsat::print_report(std::cout, report);
            return report.passed() ? exit_ok : exit_validation_failed;
        }
        std::string fixed;
        for (const auto &[name, cmd] : figures)
            if (*cmd)
                fixed = name;
        emit_csv(opt, beamsat::run_sweep(build_config(opt, fixed)));
        return exit_ok;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
