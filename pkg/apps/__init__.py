# This makes Python treat the apps directory as a package
