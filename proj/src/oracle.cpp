#include "ncd/oracle.hpp"

#include <algorithm>

namespace ncd {

WordIndexer::WordIndexer(std::size_t letters, std::size_t max_length) : letters_(letters)
{
	offsets_.push_back(0);
	std::size_t layer = 1;
	for (std::size_t L = 0; L <= max_length; ++L) {
		offsets_.push_back(offsets_.back() + layer);
		layer *= letters_;
	}
}

std::size_t WordIndexer::index(const Word& w) const
{
	if (w.size() + 1 >= offsets_.size())
		throw std::length_error("word longer than the indexer capacity");
	std::size_t v = 0;
	for (std::size_t i = 0; i < w.size(); ++i)
		v = v * letters_ + w[i];
	return offsets_[w.size()] + v;
}

std::size_t WordIndexer::length_of(std::size_t index) const
{
	auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
	return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

} // namespace ncd
