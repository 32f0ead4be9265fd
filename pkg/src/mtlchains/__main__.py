from mtlchains.cli import main

main()
