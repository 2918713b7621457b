#ifndef LEVELSET_IO_HPP
#define LEVELSET_IO_HPP

#include <filesystem>
#include <string>

#include "levelset/geometry.hpp"
#include "levelset/grid.hpp"

namespace levelset {

/// Field CSV: header `# t=<time>` then rows `x[,y],u`, 2D in row-major order.
void write_field_csv(const std::filesystem::path& path, const Field& field);
Field read_field_csv(const std::filesystem::path& path);

/// Trajectory persistence: one CSV per snapshot plus manifest.csv rows of
/// (index, time, file).
void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj,
                      const std::string& stem = "snap");

/// Interface CSV rows: t,x[,y].
void write_interface_csv(const std::filesystem::path& path, const InterfaceSet& iface);

}  // namespace levelset

#endif
