#ifndef HCP3_NAMED_DATA_HPP
#define HCP3_NAMED_DATA_HPP

namespace hcp3::data {

// Embedded instance edge lists in the .hcp text format.
extern const char* const goldner_harary;
extern const char* const sousselier;
extern const char* const twenty_four_cell;
extern const char* const foster_cage;
extern const char* const sims_gewirtz;
extern const char* const sheehan_40;
extern const char* const sheehan_80;

} // namespace hcp3::data

#endif
