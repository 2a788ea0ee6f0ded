#include "unn/report.hpp"

#include <stdexcept>

#include "unn/csv.hpp"
#include "unn/embed.hpp"
#include "unn/knn.hpp"

namespace unn {

std::string DsreReport::to_csv() const {
    std::string out = "dataset,K,init,unn1,unn2\n";
    for (const DsreReportRow& row : rows) {
        out += row.dataset;
        out += ',';
        out += std::to_string(row.k);
        out += ',';
        out += format_double(row.init);
        out += ',';
        out += format_double(row.unn1);
        out += ',';
        out += format_double(row.unn2);
        out += '\n';
    }
    return out;
}

DsreReport compare(const Dataset& data, const std::string& label, const std::vector<int>& ks,
                   std::optional<std::uint64_t> seed) {
    if (data.size() < 2) {
        throw std::invalid_argument("comparison needs at least two patterns");
    }
    if (ks.empty()) {
        throw std::invalid_argument("no neighborhood sizes given");
    }

    DsreReport report;
    report.seed = seed;
    report.config = "criterion=pointwise,order=dataset";
    const LatentOrdering identity = LatentOrdering::identity(static_cast<int>(data.size()));

    for (const int k : ks) {
        EmbedConfig config;
        config.k = k;

        DsreReportRow row;
        row.dataset = label;
        row.k = k;
        row.init = dsre(identity, data, k);
        config.strategy = Strategy::Unn1;
        row.unn1 = embed(data, config).final_dsre;
        config.strategy = Strategy::Unn2;
        row.unn2 = embed(data, config).final_dsre;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace unn
