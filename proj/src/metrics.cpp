#include "pdq/metrics.hpp"

#include <sstream>

namespace pdq {

std::string Metrics::csv_header() {
    return "comparisons,element_moves,exchanges,partition_right_calls,partition_left_calls,"
           "bad_partitions,heapsort_fallbacks,partial_insertion_attempts,"
           "partial_insertion_aborts,max_depth";
}

std::string Metrics::to_csv_fragment() const {
    std::ostringstream out;
    out << comparisons << ',' << element_moves << ',' << exchanges << ','
        << partition_right_calls << ',' << partition_left_calls << ',' << bad_partitions << ','
        << heapsort_fallbacks << ',' << partial_insertion_attempts << ','
        << partial_insertion_aborts << ',' << max_depth;
    return out.str();
}

}  // namespace pdq
