#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unn/csv.hpp"
#include "unn/embed.hpp"
#include "unn/errors.hpp"
#include "unn/generate.hpp"
#include "unn/knn.hpp"
#include "unn/oracle.hpp"
#include "unn/report.hpp"
#include "unn/svg_plot.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

void add_generate(CLI::App& app) {
    auto* cmd = app.add_subcommand("generate", "Write a synthetic dataset CSV");
    auto opts = std::make_shared<unn::GenSpec>();
    auto out = std::make_shared<std::string>();
    const std::map<std::string, unn::Shape> shapes{{"s2d", unn::Shape::S2D},
                                                   {"s3d", unn::Shape::S3D},
                                                   {"s3d-hole", unn::Shape::S3DHole}};
    cmd->add_option("--shape", opts->shape, "Dataset shape")
        ->required()
        ->transform(CLI::CheckedTransformer(shapes, CLI::ignore_case));
    cmd->add_option("--n", opts->n, "Number of patterns")->required()->check(CLI::Range(2, 1 << 24));
    cmd->add_option("--sigma", opts->noise_sigma, "Gaussian noise std-dev")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", opts->seed, "RNG seed")->required();
    cmd->add_option("--out", *out, "Output CSV path")->required();
    cmd->callback([opts, out] {
        const unn::Dataset data = unn::generate(*opts);
        unn::save_csv(data, *out);
        std::cout << "wrote " << data.size() << " x " << data.dim() << " dataset to " << *out << "\n";
    });
}

void add_embed(CLI::App& app) {
    auto* cmd = app.add_subcommand("embed", "Embed a dataset onto the latent line");
    struct Args {
        std::string in;
        std::string out;
        unn::EmbedConfig config;
        std::uint64_t seed = 0;
    };
    auto args = std::make_shared<Args>();
    const std::map<std::string, unn::Strategy> strategies{{"unn1", unn::Strategy::Unn1},
                                                          {"unn2", unn::Strategy::Unn2}};
    const std::map<std::string, unn::Criterion> criteria{{"pointwise", unn::Criterion::Pointwise},
                                                         {"full-dsre", unn::Criterion::FullDsre}};
    const std::map<std::string, unn::InsertionOrder> orders{
        {"dataset", unn::InsertionOrder::DatasetOrder}, {"shuffled", unn::InsertionOrder::Shuffled}};
    cmd->add_option("--in", args->in, "Dataset CSV")->required();
    cmd->add_option("--k", args->config.k, "Neighborhood size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", args->config.strategy, "Insertion strategy")
        ->required()
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
    cmd->add_option("--criterion", args->config.criterion, "Insertion criterion")
        ->transform(CLI::CheckedTransformer(criteria, CLI::ignore_case));
    cmd->add_option("--order", args->config.insertion_order, "Pattern insertion order")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
    auto* seed_opt = cmd->add_option("--seed", args->seed, "Shuffle seed (required with --order shuffled)");
    cmd->add_option("--out", args->out, "Output ordering CSV")->required();
    cmd->callback([args, seed_opt] {
        const bool have_seed = seed_opt->count() > 0;
        if (args->config.insertion_order == unn::InsertionOrder::Shuffled && !have_seed) {
            throw CLI::ValidationError("--seed is required with --order shuffled");
        }
        if (have_seed) {
            args->config.seed = args->seed;
        }
        const unn::Dataset data = unn::load_csv(args->in);
        const unn::EmbedResult result = unn::embed(data, args->config);
        unn::save_ordering_csv(result.ordering, args->out);
        std::cout << unn::format_double(result.final_dsre) << "\n";
    });
}

void add_dsre(CLI::App& app) {
    auto* cmd = app.add_subcommand("dsre", "Evaluate the DSRE of an ordering");
    struct Args {
        std::string in;
        std::string ordering;
        int k = 0;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--in", args->in, "Dataset CSV")->required();
    cmd->add_option("--ordering", args->ordering, "Ordering CSV")->required();
    cmd->add_option("--k", args->k, "Neighborhood size")->required()->check(CLI::PositiveNumber);
    cmd->callback([args] {
        const unn::Dataset data = unn::load_csv(args->in);
        const unn::LatentOrdering ordering = unn::load_ordering_csv(args->ordering);
        std::cout << unn::format_double(unn::dsre(ordering, data, args->k)) << "\n";
    });
}

void add_oracle(CLI::App& app) {
    auto* cmd = app.add_subcommand("oracle", "Exhaustive search for the optimal ordering");
    struct Args {
        std::string in;
        int k = 0;
        int max_n = 10;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--in", args->in, "Dataset CSV")->required();
    cmd->add_option("--k", args->k, "Neighborhood size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--max-n", args->max_n, "Refuse datasets larger than this")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->callback([args] {
        const unn::Dataset data = unn::load_csv(args->in);
        const unn::OracleResult result = unn::brute_force(data, args->k, args->max_n);
        std::cout << "best dsre: " << unn::format_double(result.best_dsre) << "\n";
        std::cout << "ordering:";
        for (const int p : result.best_ordering.patterns_by_slot()) {
            std::cout << ' ' << p;
        }
        std::cout << "\nevaluated: " << result.evaluated << "\n";
    });
}

void add_compare(CLI::App& app) {
    auto* cmd = app.add_subcommand("compare", "DSRE comparison grid: init vs unn1 vs unn2");
    struct Args {
        std::string in;
        std::vector<int> ks;
        std::string out;
        std::string label;
        std::uint64_t seed = 0;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--in", args->in, "Dataset CSV")->required();
    cmd->add_option("--ks", args->ks, "Neighborhood sizes, e.g. 2,5,10")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", args->out, "Output report CSV")->required();
    cmd->add_option("--label", args->label, "Dataset label for the report rows");
    auto* seed_opt = cmd->add_option("--seed", args->seed, "Seed echoed into the report metadata");
    cmd->callback([args, seed_opt] {
        const unn::Dataset data = unn::load_csv(args->in);
        const std::string label = args->label.empty() ? args->in : args->label;
        const std::optional<std::uint64_t> seed =
            seed_opt->count() > 0 ? std::optional<std::uint64_t>(args->seed) : std::nullopt;
        const unn::DsreReport report = unn::compare(data, label, args->ks, seed);
        write_text(args->out, report.to_csv());
        std::cout << "wrote " << report.rows.size() << " rows to " << args->out << "\n";
    });
}

void add_plot(CLI::App& app) {
    auto* cmd = app.add_subcommand("plot", "SVG scatter plot colored by latent order");
    struct Args {
        std::string in;
        std::string ordering;
        std::vector<int> dims;
        std::string out;
    };
    auto args = std::make_shared<Args>();
    cmd->add_option("--in", args->in, "Dataset CSV")->required();
    cmd->add_option("--ordering", args->ordering, "Ordering CSV")->required();
    cmd->add_option("--dims", args->dims, "Axes to plot, e.g. 0,1 or 0,1,2")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", args->out, "Output SVG path")->required();
    cmd->callback([args] {
        const unn::Dataset data = unn::load_csv(args->in);
        const unn::LatentOrdering ordering = unn::load_ordering_csv(args->ordering);
        std::vector<int> dims = args->dims;
        if (dims.empty()) {
            dims = data.dim() >= 3 ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1};
        }
        write_text(args->out, unn::plot_embedding(data, ordering, dims));
        std::cout << "wrote " << args->out << "\n";
    });
}

void add_bench(CLI::App& app) {
    auto* cmd = app.add_subcommand("bench", "Runtime and operation counts on random data");
    struct Args {
        unn::EmbedConfig config;
        int d = 0;
        std::vector<int> ns;
        std::uint64_t seed = 0;
    };
    auto args = std::make_shared<Args>();
    const std::map<std::string, unn::Strategy> strategies{{"unn1", unn::Strategy::Unn1},
                                                          {"unn2", unn::Strategy::Unn2}};
    cmd->add_option("--strategy", args->config.strategy, "Insertion strategy")
        ->required()
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
    cmd->add_option("--k", args->config.k, "Neighborhood size")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--d", args->d, "Data dimensionality")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--ns", args->ns, "Dataset sizes, e.g. 250,500,1000")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(2, 1 << 24));
    cmd->add_option("--seed", args->seed, "RNG seed for the random clouds")->required();
    cmd->callback([args] {
        // model_steps = distance_evals * d + reconstruction_evals * K * d
        std::cout << "n,wall_ms,distance_evals,reconstruction_evals,model_steps\n";
        for (const int n : args->ns) {
            const unn::Dataset data = unn::random_cloud(n, args->d, args->seed);
            const auto start = std::chrono::steady_clock::now();
            const unn::EmbedResult result = unn::embed(data, args->config);
            const auto stop = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
            const std::int64_t steps =
                result.ops.distance_evals * args->d +
                result.ops.reconstruction_evals * args->config.k * args->d;
            char line[160];
            std::snprintf(line, sizeof line, "%d,%.2f,%lld,%lld,%lld\n", n, ms,
                          static_cast<long long>(result.ops.distance_evals),
                          static_cast<long long>(result.ops.reconstruction_evals),
                          static_cast<long long>(steps));
            std::cout << line;
        }
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unn: 1-D manifold ordering by K-nearest-neighbor reconstruction error"};
    app.require_subcommand(1);
    add_generate(app);
    add_embed(app);
    add_dsre(app);
    add_oracle(app);
    add_compare(app);
    add_plot(app);
    add_bench(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const unn::SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
