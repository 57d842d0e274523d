namespace rmpc {}
