#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncd/field.hpp"

namespace ncd {

/// Incremental exact row echelon form over sparse vectors. Each stored row
/// is monic at its pivot, the largest column it touches.
template <Field F>
class SparseEliminator {
public:
	using Vector = std::map<std::size_t, F, std::greater<>>;

	/// Eliminates pivots from `row` in descending column order. Returns the
	/// residue, empty when the row lies in the current span.
	Vector reduce(Vector row) const
	{
		auto it = row.begin();
		while (it != row.end()) {
			auto p = pivots_.find(it->first);
			if (p == pivots_.end()) {
				++it;
				continue;
			}
			const F c = it->second;
			const std::size_t col = it->first;
			for (const auto& [k, v] : p->second) {
				auto [slot, fresh] = row.try_emplace(k, -(c * v));
				if (!fresh) {
					slot->second -= c * v;
					if (slot->second.is_zero())
						row.erase(slot);
				}
			}
			it = row.upper_bound(col);
		}
		return row;
	}

	/// Adds a row; true when the rank grew.
	bool add(Vector row)
	{
		Vector r = reduce_leading(std::move(row));
		if (r.empty())
			return false;
		const F inv = r.begin()->second.inverse();
		std::vector<std::pair<std::size_t, F>> stored;
		stored.reserve(r.size());
		for (const auto& [k, v] : r)
			stored.emplace_back(k, inv * v);
		pivots_.emplace(r.begin()->first, std::move(stored));
		return true;
	}

	bool contains(Vector row) const { return reduce(std::move(row)).empty(); }

	std::size_t rank() const { return pivots_.size(); }
	/// Pivot columns in ascending order.
	std::vector<std::size_t> pivot_columns() const
	{
		std::vector<std::size_t> out;
		out.reserve(pivots_.size());
		for (const auto& [k, v] : pivots_)
			out.push_back(k);
		std::sort(out.begin(), out.end());
		return out;
	}

private:
	/// Clears pivots only until the leading column is new, which is all the
	/// echelon form needs.
	Vector reduce_leading(Vector row) const
	{
		while (!row.empty()) {
			auto p = pivots_.find(row.begin()->first);
			if (p == pivots_.end())
				break;
			const F c = row.begin()->second;
			for (const auto& [k, v] : p->second) {
				auto [slot, fresh] = row.try_emplace(k, -(c * v));
				if (!fresh) {
					slot->second -= c * v;
					if (slot->second.is_zero())
						row.erase(slot);
				}
			}
		}
		return row;
	}

	std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, F>>> pivots_;
};

} // namespace ncd
