#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "dcshap/knn.hpp"
#include "dcshap/rng.hpp"

using dcshap::CollaborationModel;
using dcshap::Index;
using dcshap::KnnBackend;
using dcshap::Matrix;
using dcshap::Vector;

namespace {

Matrix random_matrix(Index rows, Index cols, dcshap::Rng& rng) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
    return m;
}

double time_backend(const CollaborationModel& model, const Matrix& queries,
                    KnnBackend backend, int repeats, Vector& out) {
    out = model.predict_proba(queries, backend);
    double best = 1e300;
    for (int rep = 0; rep < repeats; ++rep) {
        const double t0 = omp_get_wtime();
        out = model.predict_proba(queries, backend);
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    Index rows = 32768;
    Index cols = 9;
    Index queries = 4096;
    if (argc > 1) rows = std::atoll(argv[1]);
    if (argc > 2) cols = std::atoll(argv[2]);
    if (argc > 3) queries = std::atoll(argv[3]);
    const int repeats = 3;

    dcshap::Rng rng(1234);
    CollaborationModel model;
    model.training_points = random_matrix(rows, cols, rng);
    model.training_labels.resize(static_cast<size_t>(rows));
    for (auto& label : model.training_labels) label = static_cast<int>(rng.below(2));
    model.finalize();
    const Matrix probe = random_matrix(queries, cols, rng);

    std::printf("%lld training rows, %lld dims, %lld queries, k=%d, %d thread(s)\n",
                static_cast<long long>(rows), static_cast<long long>(cols),
                static_cast<long long>(queries), model.k, omp_get_max_threads());

    struct Entry {
        const char* name;
        KnnBackend backend;
    };
    const std::vector<Entry> entries = {{"serial scan", KnnBackend::kSerial},
                                        {"parallel scan", KnnBackend::kParallel},
                                        {"kd-tree", KnnBackend::kKdTree}};

    Vector reference;
    double serial_time = 0.0;
    for (const Entry& entry : entries) {
        Vector out;
        const double elapsed = time_backend(model, probe, entry.backend, repeats, out);
        if (entry.backend == KnnBackend::kSerial) {
            reference = out;
            serial_time = elapsed;
        } else if ((out - reference).cwiseAbs().maxCoeff() != 0.0) {
            std::fprintf(stderr, "%s disagrees with the serial scan\n", entry.name);
            return 1;
        }
        std::printf("%-14s %8.3f ms total  %7.4f ms/query  %5.2fx vs serial\n", entry.name,
                    elapsed * 1e3, elapsed * 1e3 / static_cast<double>(queries),
                    serial_time / elapsed);
    }
    return 0;
}
