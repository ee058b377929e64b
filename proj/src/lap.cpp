#include "jointgraph/lap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jointgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest-augmenting-path assignment with dual potentials (Jonker-Volgenant
// family). Grows the matching one row at a time via a Dijkstra search in
// reduced costs; duals keep reduced costs nonnegative so each search is a
// shortest-path computation.
struct SapSolver {
    const Eigen::MatrixXd& c;
    int k;
    std::vector<double> u, v;       // row / column potentials
    std::vector<int> row2col, col2row;

    explicit SapSolver(const Eigen::MatrixXd& costs)
        : c(costs),
          k(static_cast<int>(costs.rows())),
          u(static_cast<std::size_t>(k), 0.0),
          v(static_cast<std::size_t>(k), 0.0),
          row2col(static_cast<std::size_t>(k), -1),
          col2row(static_cast<std::size_t>(k), -1) {}

    void solve() {
        std::vector<double> shortest(static_cast<std::size_t>(k));
        std::vector<int> pred(static_cast<std::size_t>(k));
        std::vector<bool> row_scanned(static_cast<std::size_t>(k));
        std::vector<bool> col_done(static_cast<std::size_t>(k));

        for (int cur = 0; cur < k; ++cur) {
            std::fill(shortest.begin(), shortest.end(), kInf);
            std::fill(pred.begin(), pred.end(), -1);
            std::fill(row_scanned.begin(), row_scanned.end(), false);
            std::fill(col_done.begin(), col_done.end(), false);

            int i = cur;
            int sink = -1;
            double min_val = 0.0;

            while (sink == -1) {
                row_scanned[static_cast<std::size_t>(i)] = true;
                int best_j = -1;
                double lowest = kInf;
                for (int j = 0; j < k; ++j) {
                    if (col_done[static_cast<std::size_t>(j)]) continue;
                    const double r = min_val + c(i, j) - u[static_cast<std::size_t>(i)] -
                                     v[static_cast<std::size_t>(j)];
                    if (r < shortest[static_cast<std::size_t>(j)]) {
                        shortest[static_cast<std::size_t>(j)] = r;
                        pred[static_cast<std::size_t>(j)] = i;
                    }
                    if (shortest[static_cast<std::size_t>(j)] < lowest) {
                        lowest = shortest[static_cast<std::size_t>(j)];
                        best_j = j;
                    }
                }
                min_val = lowest;
                col_done[static_cast<std::size_t>(best_j)] = true;
                if (col2row[static_cast<std::size_t>(best_j)] == -1) {
                    sink = best_j;
                } else {
                    i = col2row[static_cast<std::size_t>(best_j)];
                }
            }

            u[static_cast<std::size_t>(cur)] += min_val;
            for (int r = 0; r < k; ++r) {
                if (r != cur && row_scanned[static_cast<std::size_t>(r)])
                    u[static_cast<std::size_t>(r)] +=
                        min_val - shortest[static_cast<std::size_t>(row2col[static_cast<std::size_t>(r)])];
            }
            for (int j = 0; j < k; ++j) {
                if (col_done[static_cast<std::size_t>(j)])
                    v[static_cast<std::size_t>(j)] -=
                        min_val - shortest[static_cast<std::size_t>(j)];
            }

            // Walk the alternating path backwards from the sink.
            int j = sink;
            while (j != -1) {
                const int r = pred[static_cast<std::size_t>(j)];
                col2row[static_cast<std::size_t>(j)] = r;
                const int next = row2col[static_cast<std::size_t>(r)];
                row2col[static_cast<std::size_t>(r)] = j;
                j = next;
            }
        }
    }
};

// Greedy lexicographic normalization over the epsilon-tight edge graph. Any
// optimal assignment uses only edges with zero reduced cost, so the set of
// optimal permutations equals the perfect matchings of that subgraph; the
// greedy pass fixes, row by row, the smallest column that still extends to a
// perfect matching.
struct LexRefiner {
    const std::vector<std::vector<int>>& tight;  // ascending columns per row
    std::vector<int>& row2col;
    std::vector<int>& col2row;
    std::vector<bool> col_fixed, visited;

    LexRefiner(const std::vector<std::vector<int>>& t, std::vector<int>& rc, std::vector<int>& cr)
        : tight(t),
          row2col(rc),
          col2row(cr),
          col_fixed(rc.size(), false),
          visited(rc.size(), false) {}

    bool augment(int row) {
        for (int j : tight[static_cast<std::size_t>(row)]) {
            if (col_fixed[static_cast<std::size_t>(j)] || visited[static_cast<std::size_t>(j)])
                continue;
            visited[static_cast<std::size_t>(j)] = true;
            const int owner = col2row[static_cast<std::size_t>(j)];
            if (owner == -1 || augment(owner)) {
                row2col[static_cast<std::size_t>(row)] = j;
                col2row[static_cast<std::size_t>(j)] = row;
                return true;
            }
        }
        return false;
    }

    void run() {
        const int k = static_cast<int>(row2col.size());
        for (int i = 0; i < k; ++i) {
            for (int j : tight[static_cast<std::size_t>(i)]) {
                if (col_fixed[static_cast<std::size_t>(j)]) continue;
                if (j == row2col[static_cast<std::size_t>(i)]) break;  // already the best
                // Tentatively give column j to row i and try to re-match the
                // displaced row through the remaining free column.
                const int displaced = col2row[static_cast<std::size_t>(j)];
                const int freed = row2col[static_cast<std::size_t>(i)];
                row2col[static_cast<std::size_t>(i)] = j;
                col2row[static_cast<std::size_t>(j)] = i;
                row2col[static_cast<std::size_t>(displaced)] = -1;
                col2row[static_cast<std::size_t>(freed)] = -1;
                std::fill(visited.begin(), visited.end(), false);
                visited[static_cast<std::size_t>(j)] = true;
                if (augment(displaced)) break;
                // Revert.
                row2col[static_cast<std::size_t>(displaced)] = j;
                col2row[static_cast<std::size_t>(j)] = displaced;
                row2col[static_cast<std::size_t>(i)] = freed;
                col2row[static_cast<std::size_t>(freed)] = i;
            }
            col_fixed[static_cast<std::size_t>(row2col[static_cast<std::size_t>(i)])] = true;
        }
    }
};

}  // namespace

Assignment solve_lap(const Eigen::MatrixXd& costs, LapSense sense) {
    if (costs.rows() != costs.cols())
        throw std::invalid_argument("solve_lap: cost matrix must be square");
    const int k = static_cast<int>(costs.rows());
    if (k < 1) throw std::invalid_argument("solve_lap: need k >= 1");
    if (!costs.allFinite())
        throw std::invalid_argument("solve_lap: cost matrix has a non-finite entry");

    const Eigen::MatrixXd work = (sense == LapSense::maximize) ? (-costs).eval() : costs;

    SapSolver sap(work);
    sap.solve();

    // Tight edges: reduced cost within eps of zero. Exact ties (integer-valued
    // inputs) land at 0; eps absorbs float rounding from the dual updates.
    const double eps = 1e-9 * std::max(1.0, work.cwiseAbs().maxCoeff());
    std::vector<std::vector<int>> tight(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (work(i, j) - sap.u[static_cast<std::size_t>(i)] - sap.v[static_cast<std::size_t>(j)] <= eps)
                tight[static_cast<std::size_t>(i)].push_back(j);

    LexRefiner refiner(tight, sap.row2col, sap.col2row);
    refiner.run();

    Assignment out;
    out.perm = sap.row2col;
    out.cost = 0.0;
    for (int i = 0; i < k; ++i) out.cost += costs(i, out.perm[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace jointgraph
