namespace qmirror {
}
