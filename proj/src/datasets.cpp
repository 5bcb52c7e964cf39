#include "puc/datasets.hpp"

#include "puc/csv.hpp"
#include "puc/errors.hpp"

namespace puc {
namespace {

// Two bundled example data sets, stored verbatim as CSV text so that the
// bytes (and their content hashes) are stable across platforms.
//
// Dataset A: 20 paired observations used for the two-dimensional examples.
// Dataset B: 20 years of losses across 19 areas (monetary unit: 1 million EUR)
// used for the risk-aggregation case study.

constexpr const char* kDatasetA =
    "X1,X2\n"
    "0.468,0.966\n"
    "9.951,2.679\n"
    "0.866,0.897\n"
    "6.731,2.249\n"
    "1.421,0.956\n"
    "2.040,1.141\n"
    "2.967,1.707\n"
    "1.200,1.008\n"
    "0.426,1.065\n"
    "1.946,1.162\n"
    "0.676,0.918\n"
    "1.184,1.336\n"
    "0.960,0.933\n"
    "1.972,1.077\n"
    "1.549,1.041\n"
    "0.819,0.899\n"
    "0.063,0.710\n"
    "1.280,1.118\n"
    "0.824,0.894\n"
    "0.227,0.837\n";

constexpr const char* kDatasetB =
    "A1,A2,A3,A4,A5,A6,A7,A8,A9,A10,A11,A12,A13,A14,A15,A16,A17,A18,A19\n"
    "23.664,154.664,40.569,14.504,10.468,7.464,22.202,17.682,12.395,18.551,1.842,4.100,46.135,14.698,44.441,7.981,35.833,10.689,7.299\n"
    "1.080,59.545,3.297,1.344,1.859,0.477,6.107,7.196,1.436,3.720,0.429,1.026,7.469,7.058,4.512,0.762,14.474,9.337,0.740\n"
    "21.731,31.049,55.973,5.816,14.869,20.771,3.580,14.509,17.175,87.307,0.209,2.344,22.651,4.117,26.586,3.920,13.804,2.683,3.026\n"
    "28.99,31.052,30.328,4.709,0.717,3.530,6.032,6.512,0.682,3.115,0.521,0.696,31.126,1.878,29.423,6.394,18.064,1.201,0.894\n"
    "53.616,62.027,57.639,1.804,2.073,4.361,46.018,22.612,1.581,11.179,2.715,1.327,40.156,4.655,104.691,28.579,17.832,1.618,3.402\n"
    "29.95,41.722,12.964,1.127,1.063,4.873,6.571,11.966,15.676,24.263,4.832,0.701,16.712,11.852,29.234,7.098,17.866,5.206,5.664\n"
    "3.474,14.429,10.869,0.945,2.198,1.484,4.547,2.556,0.456,1.137,0.268,0.580,11.851,2.057,11.605,0.282,16.925,2.082,1.008\n"
    "10.02,31.283,21.116,1.663,2.153,0.932,25.163,3.222,1.581,5.477,0.741,0.369,3.814,1.869,8.126,1.032,14.985,1.390,1.703\n"
    "5.816,14.804,128.072,0.523,0.324,0.477,3.049,7.791,4.079,7.002,0.524,6.554,5.459,3.007,8.528,1.920,5.638,2.149,2.908\n"
    "170.725,576.767,108.361,41.599,20.253,35.412,126.698,71.079,21.762,64.582,9.882,6.401,106.197,44.912,191.809,90.559,154.492,36.626,36.276\n"
    "21.423,50.595,4.360,0.327,1.566,64.621,5.650,1.258,0.626,3.556,1.052,8.277,22.564,8.961,19.817,16.437,25.990,2.364,6.434\n"
    "6.38,28.316,3.740,0.442,0.736,0.470,3.406,7.859,0.894,3.591,0.136,0.364,28.000,7.574,3.213,1.749,12.735,1.744,0.558\n"
    "124.665,33.359,14.712,0.321,0.975,2.005,3.981,4.769,2.006,1.973,1.990,15.176,57.235,23.686,110.035,17.373,7.276,2.494,0.525\n"
    "20.165,49.948,17.658,0.595,0.548,29.35,6.782,4.873,2.921,6.394,0.630,0.762,25.897,3.439,8.161,3.327,24.733,2.807,1.618\n"
    "78.106,41.681,13.753,0.585,0.259,0.765,7.013,9.426,2.18,3.769,0.770,15.024,36.068,1.613,6.127,8.103,12.596,4.894,0.822\n"
    "11.067,444.712,365.351,99.366,8.856,28.654,10.589,13.621,9.589,19.485,0.287,0.464,24.211,38.616,51.889,1.316,173.080,3.557,11.627\n"
    "6.704,81.895,14.266,0.972,0.519,0.644,8.057,18.071,5.515,13.163,0.590,2.745,16.124,2.398,20.997,2.515,5.161,2.840,3.002\n"
    "15.55,277.643,26.564,0.788,0.225,1.230,26.800,64.538,2.637,80.711,0.245,0.217,12.416,4.972,59.417,3.762,24.603,7.404,19.107\n"
    "10.099,18.815,9.352,2.051,1.089,6.102,2.678,4.064,2.373,2.057,0.415,0.351,10.707,2.468,10.673,1.743,27.266,1.368,0.644\n"
    "8.492,138.708,46.708,3.68,1.132,1.698,165.6,7.926,2.972,5.237,0.566,0.708,22.646,6.652,14.437,63.692,113.231,7.218,2.548\n";

}  // namespace

std::string_view dataset_a_csv() { return kDatasetA; }
std::string_view dataset_b_csv() { return kDatasetB; }

const Table& dataset_a() {
    static const Table t = parse_csv_text(kDatasetA, "dataset A");
    return t;
}

const Table& dataset_b() {
    static const Table t = parse_csv_text(kDatasetB, "dataset B");
    return t;
}

const Table& bundled_dataset(std::string_view name) {
    if (name == "A" || name == "a") return dataset_a();
    if (name == "B" || name == "b") return dataset_b();
    throw ConfigError("unknown bundled dataset '" + std::string(name) +
                      "' (expected A or B)");
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace puc
