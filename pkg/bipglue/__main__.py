from bipglue.cli import main

main()
