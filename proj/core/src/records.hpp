// Assembly of ClassRecords from a node of the search (members plus the
// closure masks the search already maintains), and the maximality post-pass
// over a complete record list. Shared by the enumeration strategies and by
// refresh_analyses.
#pragma once

#include <functional>
#include <vector>

#include "engine.hpp"
#include "indgen/search.hpp"

namespace indgen::internal {

// 0 -> hardware concurrency (at least 1); negative -> std::invalid_argument.
int effective_workers(int requested);

// Runs body(worker_index) on `workers` threads (inline when workers == 1)
// and rethrows the first worker exception after joining.
void parallel_run(int workers, const std::function<void(int)>& body);

// Every field except classification.maximal / dead_end, which need the whole
// database. members must be sorted and canonical; closure = close(members);
// cofactors[i] = close(members minus the i-th).
ClassRecord make_class_record(const DegreeContext& ctx,
                              const std::vector<Rank>& members,
                              const ElementMask& closure,
                              const std::vector<ElementMask>& cofactors);

// Marks classification.maximal and dead_end across records: a class is
// non-maximal exactly when some recorded class one size up removes to it.
// Expects one record per class of every size the degree admits; throws
// std::logic_error if a removal key is missing.
void mark_maximality(const DegreeContext& ctx, std::vector<ClassRecord>& records,
                     int workers);

} // namespace indgen::internal
